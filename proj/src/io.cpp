#include "mingens/io.hpp"

#include <fstream>
#include <sstream>

namespace mingens {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int exact_sqrt(std::size_t x) {
  int r = 0;
  while (static_cast<std::size_t>(r + 1) * static_cast<std::size_t>(r + 1) <= x) ++r;
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(r) == x ? r : -1;
}

BoolMat block_to_matrix(const std::vector<std::string>& block, std::size_t first_line) {
  try {
    if (block.size() == 1 && block[0].size() > 1) {
      if (exact_sqrt(block[0].size()) < 0) throw std::invalid_argument("bit string length is not a square");
      return BoolMat::from_bits(block[0]);
    }
    return BoolMat::from_lines(block);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), first_line);
  }
}

}  // namespace

std::vector<BoolMat> parse_boolmats(std::istream& in) {
  std::vector<BoolMat> out;
  std::vector<std::string> block;
  std::size_t lineno = 0, block_start = 0;
  std::string line;
  auto flush = [&] {
    if (!block.empty()) out.push_back(block_to_matrix(block, block_start));
    block.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) {
      flush();
      continue;
    }
    if (block.empty()) block_start = lineno;
    block.push_back(line);
  }
  flush();
  return out;
}

std::vector<BoolMat> read_boolmats(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return parse_boolmats(in);
}

std::string format_boolmats(const std::vector<BoolMat>& mats) {
  std::string s;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (i) s += '\n';
    s += mats[i].to_pretty();
  }
  return s;
}

void write_boolmats(const std::filesystem::path& p, const std::vector<BoolMat>& mats) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << format_boolmats(mats);
}

ZnMat parse_znmat(std::istream& in, Residue n) {
  std::vector<std::vector<Residue>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<Residue> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        Residue v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad residue '" + tok + "'", lineno);
      }
    }
    rows.push_back(std::move(row));
  }
  const std::size_t k = rows.size();
  if (k == 0) throw ParseError("empty matrix", lineno);
  std::vector<Residue> e;
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) throw ParseError("matrix is not square", i + 1);
    e.insert(e.end(), rows[i].begin(), rows[i].end());
  }
  return {static_cast<int>(k), n, std::move(e)};
}

std::vector<TropMat> parse_tropmats(std::istream& in, Flavor f, int t) {
  std::vector<TropMat> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.size() != 4) throw ParseError("expected 4 entries", lineno);
    std::array<TropValue, 4> e{};
    try {
      for (std::size_t i = 0; i < 4; ++i) e[i] = parse_value(f, t, toks[i]);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what(), lineno);
    }
    out.emplace_back(f, t, e);
  }
  return out;
}

nlohmann::json to_json(const Certification& c) {
  nlohmann::json j = nlohmann::json::object();
  j["generates"] = c.generates ? nlohmann::json(*c.generates) : nlohmann::json(nullptr);
  j["irredundant"] = c.irredundant ? nlohmann::json(*c.irredundant) : nlohmann::json(nullptr);
  j["closure_size"] = c.closure_size;
  j["target_size"] = c.target_size ? nlohmann::json(*c.target_size) : nlohmann::json(nullptr);
  if (c.redundant_witness) j["redundant_generator"] = *c.redundant_witness;
  return j;
}

nlohmann::json to_json(const GenSetReport& r) {
  nlohmann::json j;
  j["monoid"] = to_string(r.monoid);
  j["n"] = r.n;
  j["rank"] = r.rank;
  auto gens = nlohmann::json::array();
  for (const auto& g : r.generators) gens.push_back(g.to_string());
  j["generators"] = gens;
  j["certified"] = to_json(r.certified);
  j["notes"] = r.notes;
  return j;
}

nlohmann::json to_json(const ZnMat& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const DiagonalForm& d) {
  auto diag = nlohmann::json::array();
  for (int i = 0; i < d.diag.dim(); ++i) diag.push_back(d.diag.at(i, i));
  return {{"diag", diag}, {"left_unit", to_json(d.left_unit)}, {"right_unit", to_json(d.right_unit)},
          {"steps", d.steps}};
}

}  // namespace mingens
