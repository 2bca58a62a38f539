#include "genset/io.hpp"

#include <fstream>
#include <sstream>

#include "genset/erasure.hpp"

namespace genset {
namespace {

// Rows of '0'/'1', one per line; blank lines and '#' comments dropped.
std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    size_t stop = line.find_last_not_of(" \t");
    std::string body = line.substr(start, stop - start + 1);
    if (body[0] == '#') continue;
    out.push_back(std::move(body));
  }
  return out;
}

u64 parse_row(const std::string& body, int cols) {
  if (static_cast<int>(body.size()) != cols)
    throw ParamError("row text: ragged row of length " +
                     std::to_string(body.size()) + ", expected " +
                     std::to_string(cols));
  u64 bits = 0;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '1')
      bits |= u64{1} << i;
    else if (body[i] != '0')
      throw ParamError("row text: expected 0/1, got '" +
                       std::string(1, body[i]) + "'");
  }
  return bits;
}

long long parse_integer(const std::string& field, const std::string& what) {
  if (field.empty()) throw ParamError(what + ": empty field");
  for (char c : field)
    if (c < '0' || c > '9')
      throw ParamError(what + ": expected a nonnegative integer, got '" +
                       field + "'");
  try {
    return std::stoll(field);
  } catch (const std::out_of_range&) {
    throw ParamError(what + ": value out of range: '" + field + "'");
  }
}

long long one_param(const CodeFamilySpec& spec) {
  if (spec.params.size() != 1 || spec.seed.has_value())
    throw ParamError("code spec: family '" + spec.family +
                     "' takes exactly one parameter");
  return spec.params[0];
}

// The documented (n, k, d) of each family is re-verified on every build so a
// bad spec never propagates downstream. d is checked by full enumeration,
// affordable whenever the dimension is within the enumeration cap.
LinearCode checked(LinearCode code, int n, int k, std::optional<int> d) {
  if (code.n != n || code.k != k)
    throw DataError("make_code: family produced [" + std::to_string(code.n) +
                    "," + std::to_string(code.k) + "], documented [" +
                    std::to_string(n) + "," + std::to_string(k) + "]");
  if (d.has_value() && k >= 1 && k <= 24) {
    int got = min_max_distance(code).first;
    if (got != *d)
      throw DataError("make_code: family distance " + std::to_string(got) +
                      ", documented " + std::to_string(*d));
  }
  return code;
}

}  // namespace

std::string write_matrix_text(const BinMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    out += to_text(m.row(r));
    out += '\n';
  }
  return out;
}

std::string write_vectorset_text(const VectorSet& a) {
  std::string out;
  for (const auto& v : a.members) {
    out += to_text(v);
    out += '\n';
  }
  return out;
}

BinMatrix read_matrix_text(const std::string& text) {
  std::vector<std::string> lines = data_lines(text);
  if (lines.empty()) throw ParamError("matrix text: no rows");
  int cols = static_cast<int>(lines[0].size());
  if (cols < 1 || cols > kMaxDim)
    throw ParamError("matrix text: bad row length " + std::to_string(cols));
  BinMatrix m(0, cols);
  for (const auto& body : lines) m.push_row_bits(parse_row(body, cols));
  return m;
}

VectorSet read_vectorset_text(const std::string& text) {
  BinMatrix m = read_matrix_text(text);
  std::vector<BitVector> members;
  members.reserve(static_cast<size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) members.push_back(m.row(r));
  return VectorSet(m.cols, std::move(members));
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParamError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParamError("cannot write file: " + path);
  out << text;
  if (!out) throw ParamError("write failed: " + path);
}

BinMatrix load_matrix(const std::string& path) {
  return read_matrix_text(load_text(path));
}

VectorSet load_vectorset(const std::string& path) {
  return read_vectorset_text(load_text(path));
}

CodeFamilySpec parse_code_spec(const std::string& text) {
  CodeFamilySpec spec;
  std::vector<std::string> fields;
  size_t pos = 0;
  while (true) {
    size_t colon = text.find(':', pos);
    if (colon == std::string::npos) {
      fields.push_back(text.substr(pos));
      break;
    }
    fields.push_back(text.substr(pos, colon - pos));
    pos = colon + 1;
  }
  if (fields.empty() || fields[0].empty())
    throw ParamError("code spec: empty family name");
  spec.family = fields[0];
  // The trailing field of random:N:K:SEED is a seed, not a size parameter.
  size_t nparams = fields.size() - 1;
  bool has_seed = spec.family == "random" && nparams == 3;
  if (has_seed) {
    spec.seed = static_cast<u64>(
        parse_integer(fields.back(), "code spec seed"));
    --nparams;
  }
  for (size_t i = 1; i <= nparams; ++i)
    spec.params.push_back(parse_integer(fields[i], "code spec parameter"));
  return spec;
}

LinearCode make_code(const CodeFamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "repetition") {
    int n = static_cast<int>(one_param(spec));
    return checked(repetition_code(n), n, 1, n);
  }
  if (f == "single-parity") {
    int n = static_cast<int>(one_param(spec));
    return checked(single_parity_code(n), n, n - 1, 2);
  }
  // Length caps keep every family inside the 63-column word representation.
  if (f == "hamming") {
    int m = static_cast<int>(one_param(spec));
    if (m < 2 || m > 6) throw ParamError("code spec: hamming needs 2 <= m <= 6");
    int n = (1 << m) - 1;
    return checked(hamming_code(m), n, n - m, 3);
  }
  if (f == "extended-hamming") {
    int m = static_cast<int>(one_param(spec));
    if (m < 2 || m > 5)
      throw ParamError("code spec: extended-hamming needs 2 <= m <= 5");
    int n = 1 << m;
    return checked(extended_hamming_code(m), n, n - 1 - m, 4);
  }
  if (f == "simplex") {
    int k = static_cast<int>(one_param(spec));
    if (k < 1 || k > 6) throw ParamError("code spec: simplex needs 1 <= k <= 6");
    return checked(simplex_code(k), (1 << k) - 1, k, 1 << (k - 1));
  }
  if (f == "punctured-simplex") {
    int k = static_cast<int>(one_param(spec));
    if (k < 2 || k > 6)
      throw ParamError("code spec: punctured-simplex needs 2 <= k <= 6");
    return checked(punctured_simplex_code(k), (1 << k) - 2, k,
                   (1 << (k - 1)) - 1);
  }
  if (f == "random") {
    if (spec.params.size() != 2 || !spec.seed.has_value())
      throw ParamError("code spec: random needs random:N:K:SEED");
    int n = static_cast<int>(spec.params[0]);
    int k = static_cast<int>(spec.params[1]);
    // No documented distance for a random draw; shape is still enforced.
    return checked(random_code(n, k, *spec.seed), n, k, std::nullopt);
  }
  throw ParamError("code spec: unknown family '" + f + "'");
}

bool looks_like_code_spec(const std::string& arg) {
  std::string family = arg.substr(0, arg.find(':'));
  static const char* kFamilies[] = {
      "repetition", "single-parity",     "hamming", "extended-hamming",
      "simplex",    "punctured-simplex", "random"};
  for (const char* f : kFamilies)
    if (family == f) return true;
  return false;
}

LinearCode load_code(const std::string& arg) {
  if (looks_like_code_spec(arg)) return make_code(parse_code_spec(arg));
  return code_from_generator(load_matrix(arg));
}

u64 fnv1a64(const std::string& bytes) {
  u64 h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace genset
