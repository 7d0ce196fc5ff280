#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/hodge.hpp"
#include "ncg/hopf.hpp"

namespace ncg::io {

struct FileError : std::runtime_error {
    int line;
    FileError(const std::string& msg, int lineNo)
        : std::runtime_error("line " + std::to_string(lineNo) + ": " + msg), line(lineNo) {}
};

/// Shared scalar grammar: rationals as p/q (or integers), imaginary parts with
/// an i suffix: "3/4", "-2", "1/2+1/3i", "-i", "2i".
GaussianRational parse_scalar(const std::string& text);
std::string format_scalar(const GaussianRational& z);

/// Algebra file:
///   dimension D
///   unit  c_1 ... c_D          (scalars)
///   structure                  (then lines "i j k re im", 1-based indices,
///                               re/im plain rationals; omitted entries are 0)
///   automorphism               (optional; D rows of D scalars)
/// '#' starts a comment.
alg::FiniteAlgebra read_algebra(std::istream& in);
alg::FiniteAlgebra read_algebra_file(const std::string& path);

/// Graded calculus file:
///   degrees K                  (components 0..K-1)
///   dim k D_k                  (one per degree)
///   d k                        (then D_{k+1} rows of D_k scalars)
///   gram k                     (then D_k rows of D_k scalars)
/// Product tables are not needed by the hodge pipeline and are ignored.
calculus::GradedCalculus read_calculus(std::istream& in);
calculus::GradedCalculus read_calculus_file(const std::string& path);

/// Presentation file:
///   alphabet name[:weight] ...  (order = precedence; '*' suffix in names pairs
///                                letters as stars automatically)
///   rule WORD -> POLY           (POLY in the hopf parse grammar; WORD =
///                                juxtaposed letter names)
hopf::Presentation read_presentation(std::istream& in);
hopf::Presentation read_presentation_file(const std::string& path);

/// Minimal SVG polyline chart; values drawn in input order against x = 1..N.
std::string svg_line_chart(const std::vector<std::string>& labels,
                           const std::vector<std::vector<double>>& series, bool logScale,
                           const std::string& title);

}  // namespace ncg::io
