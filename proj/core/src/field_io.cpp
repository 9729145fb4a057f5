#include "vexfluid/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "vexfluid/errors.hpp"

namespace vexfluid {

namespace {

constexpr char kMagic[8] = {'V', 'E', 'X', 'F', 'L', 'D', '0', '1'};
constexpr std::uint32_t kEndianTag = 0x01020304u;

template <typename T>
void write_raw(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void read_raw(std::istream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
}

}  // namespace

void write_field(const std::string& path, const SpectralField& u, double time,
                 const std::string& name) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    os.write(kMagic, sizeof(kMagic));
    write_raw(os, kEndianTag);
    write_raw(os, static_cast<std::int32_t>(u.ncomp()));
    for (int a = 0; a < 3; ++a) write_raw(os, static_cast<std::int32_t>(u.grid().dims[a]));
    for (int a = 0; a < 3; ++a) write_raw(os, u.grid().box[a]);
    write_raw(os, time);
    write_raw(os, static_cast<std::int32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    for (int c = 0; c < u.ncomp(); ++c) {
        os.write(reinterpret_cast<const char*>(u.comp(c).data()),
                 static_cast<std::streamsize>(u.comp(c).size() * sizeof(std::complex<double>)));
    }
    if (!os) throw IoError("failed writing field to '" + path + "'");
}

LoadedField read_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open '" + path + "' for reading");
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw IoError("'" + path + "' is not a field container");
    }
    std::uint32_t endian = 0;
    read_raw(is, endian);
    if (endian != kEndianTag) throw IoError("'" + path + "': endianness mismatch");

    std::int32_t ncomp = 0;
    read_raw(is, ncomp);
    std::array<int, 3> dims{};
    for (int a = 0; a < 3; ++a) {
        std::int32_t d = 0;
        read_raw(is, d);
        dims[a] = d;
    }
    std::array<double, 3> box{};
    for (int a = 0; a < 3; ++a) read_raw(is, box[a]);

    LoadedField out;
    read_raw(is, out.time);
    std::int32_t name_len = 0;
    read_raw(is, name_len);
    if (name_len < 0 || name_len > 1 << 16) throw IoError("'" + path + "': bad name length");
    out.name.resize(static_cast<std::size_t>(name_len));
    is.read(out.name.data(), name_len);

    out.field = SpectralField(Grid(dims, box), ncomp);
    for (int c = 0; c < ncomp; ++c) {
        is.read(reinterpret_cast<char*>(out.field.comp(c).data()),
                static_cast<std::streamsize>(out.field.comp(c).size() *
                                             sizeof(std::complex<double>)));
    }
    if (!is) throw IoError("'" + path + "': truncated field container");
    return out;
}

}  // namespace vexfluid
