#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mingens/boolmat.hpp"
#include "mingens/genset.hpp"
#include "mingens/tropical.hpp"
#include "mingens/zn.hpp"

namespace mingens {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Boolean matrices, separated by blank lines. A block is either n lines of n
// characters or a single row-major bit string of length n*n. '#' starts a
// comment line.
std::vector<BoolMat> parse_boolmats(std::istream& in);
std::vector<BoolMat> read_boolmats(const std::filesystem::path& p);
std::string format_boolmats(const std::vector<BoolMat>& mats);
void write_boolmats(const std::filesystem::path& p, const std::vector<BoolMat>& mats);

// k rows of k residues.
ZnMat parse_znmat(std::istream& in, Residue n);
// Four whitespace separated tokens per matrix, one matrix per line.
std::vector<TropMat> parse_tropmats(std::istream& in, Flavor f, int t);

nlohmann::json to_json(const Certification& c);
nlohmann::json to_json(const GenSetReport& r);
nlohmann::json to_json(const ZnMat& m);
nlohmann::json to_json(const DiagonalForm& d);

}  // namespace mingens
