#pragma once

#include <iosfwd>
#include <string>

#include "framelat/frame.hpp"

namespace framelat {

// Scalar token: "p/q" for rationals, "p/q|r/s" for p/q + (r/s)*sqrt(d).
// Non-canonical fractions are rejected. d comes from the file header.
QuadScalar parseScalarToken(const std::string& tok, long d);
std::string scalarToToken(const QuadScalar& s);

// Frame files:
//   frame coords n=<n> k=<k> d=<d>   followed by k rows of n tokens (G row-major)
//   frame gram n=<n> k=<k> [d=<d>]   followed by n rows of n tokens
// The gram header carries d only when entries are quadratic.
FrameInput parseFrameFile(const std::string& path);
FrameInput parseFrameText(std::istream& in, const std::string& name);
void writeFrameFile(const FrameInput& frame, const std::string& path);
std::string frameToText(const FrameInput& frame);

// Seidel files: "seidel n=<n>" then n rows of n characters from {+,-,0},
// 0 exactly on the diagonal.
IntMatrix parseSeidelFile(const std::string& path);
void writeSeidelFile(const IntMatrix& s, const std::string& path);

} // namespace framelat
