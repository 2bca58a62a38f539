// File formats and code-family specs shared by the command-line front end.
//
// One text format serves sets and matrices alike: one row of '0'/'1'
// characters per line, coordinate 1 leftmost. Blank lines and lines whose
// first non-space character is '#' are skipped. All rows must have equal
// length. Writers emit exactly one '\n' after each row and no comments, so
// a written file reads back to the identical in-memory value.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genset/code.hpp"
#include "genset/matrix.hpp"
#include "genset/vecset.hpp"

namespace genset {

std::string write_matrix_text(const BinMatrix& m);
std::string write_vectorset_text(const VectorSet& a);

// Malformed content (bad characters, ragged rows, no rows at all) raises
// ParamError; so do the VectorSet constraints (zero rows, duplicates).
BinMatrix read_matrix_text(const std::string& text);
VectorSet read_vectorset_text(const std::string& text);

std::string load_text(const std::string& path);
void save_text(const std::string& path, const std::string& text);
BinMatrix load_matrix(const std::string& path);
VectorSet load_vectorset(const std::string& path);

// Colon-separated family string: hamming:M, extended-hamming:M, simplex:K,
// punctured-simplex:K, repetition:N, single-parity:N, random:N:K:SEED.
// parse_code_spec is purely syntactic; make_code validates the parameter
// list and re-checks the family's documented (n, k, d) against
// min_max_distance (the d check is skipped above the enumeration cap of
// k = 24, unreachable at desk scale).
struct CodeFamilySpec {
  std::string family;
  std::vector<long long> params;
  std::optional<u64> seed;
};

CodeFamilySpec parse_code_spec(const std::string& text);
LinearCode make_code(const CodeFamilySpec& spec);

// A known family name (with or without parameters) is a spec; anything else
// is a path to a generator-matrix file.
bool looks_like_code_spec(const std::string& arg);
LinearCode load_code(const std::string& arg);

// FNV-1a, used to digest input files into run reports.
u64 fnv1a64(const std::string& bytes);

}  // namespace genset
