#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "homaff/affine.hpp"
#include "homaff/cover.hpp"
#include "homaff/mesh.hpp"
#include "homaff/quandle.hpp"

namespace homaff::io {

// Text formats. Lines whose first non-blank character is '#' are comments;
// blank lines are ignored. Syntax problems throw ParseError; algebraic
// problems throw the owning module's error.

/// Line 1: n. Then n rows of n space-separated entries (row a lists a*b).
Quandle read_quandle(std::istream& in);
void write_quandle(std::ostream& out, const Quandle& q);

/// One block per line, space-separated elements.
Partition read_partition(std::istream& in, std::size_t n);

/// `mesh <k>`, then `group <i> <m1>x<m2>...` for each i, then optional
/// `phi <i> <j> <images of A_i's elements>` (default zero map) and
/// `c <i> <j> <element of A_j>` (default 0) lines.
AffineMesh read_mesh(std::istream& in);
void write_mesh(std::ostream& out, const AffineMesh& mesh);

/// `<m1>x<m2>x...:mul:<u>` or `<m1>x...:<img0>,<img1>,...`; an optional
/// leading `affine ` is accepted.
AffineQuandle parse_affine_spec(std::string_view spec);

/// `<u> <alpha-index> <T-index> <f(u)> <psi(u)>` per element of A, after
/// comment lines describing T.
void write_cover_sidecar(std::ostream& out, const CoverResult& r);

Quandle read_quandle_file(const std::string& path);
AffineMesh read_mesh_file(const std::string& path);

}  // namespace homaff::io
