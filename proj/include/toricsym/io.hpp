#pragma once

#include "toricsym/fan.hpp"

#include <istream>

namespace toricsym {

/// Fan text format:
///   # comment
///   dim <n>
///   rays <d>      followed by d lines of n integers
///   cones <c>     optional; c lines of 0-based ray indices
/// Without a cones block the face fan of the rays is used.
Fan parse_fan(std::istream& in);
Fan parse_fan_text(const std::string& text);
Fan parse_fan_file(const std::string& path);

/// Polytope text format: `dim <n>`, `vertices <m>`, then m lines of rationals.
Polytope parse_polytope(std::istream& in);
Polytope parse_polytope_file(const std::string& path);

std::string format_fan(const Fan& f, const std::string& comment = "");

/// Blow-up of P^{n1+n2+1} along two disjoint linear subspaces: the coordinate rays, the
/// all-minus-one ray, and two blow-up rays vanishing on the first n1 coordinates.
Fan generate_futaki(long n1, long n2);

/// FNV-1a 64-bit digest, rendered as 16 hex digits.
std::string content_hash(const std::string& bytes);

std::string read_file(const std::string& path);

/// Optional external data: the 7-fold and 8-fold with Bc = 0 from the Nill-Paffenholz
/// classification, as `np_7fold.fan` and `np_8fold.fan` under `dir`.  Absent files stay nullopt.
struct ExternalDataset {
    std::optional<Fan> seven_fold;
    std::optional<Fan> eight_fold;
    std::vector<std::string> missing;  // file names not found
};

ExternalDataset load_np_dataset(const std::string& dir);

}  // namespace toricsym
