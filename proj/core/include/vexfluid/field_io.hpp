#pragma once

#include <string>

#include "vexfluid/spectral_field.hpp"

namespace vexfluid {

/// Binary snapshot container for spectral fields. Layout:
///   magic "VEXFLD01" (8 bytes)
///   endianness tag uint32 = 0x01020304
///   ncomp int32, dims int32[3], box double[3], time double
///   name: int32 length + bytes
///   raw coefficients, component-major, complex<double>
/// Round trips are bit-exact.
void write_field(const std::string& path, const SpectralField& u, double time,
                 const std::string& name);

struct LoadedField {
    SpectralField field;
    double time = 0.0;
    std::string name;
};

LoadedField read_field(const std::string& path);

}  // namespace vexfluid
