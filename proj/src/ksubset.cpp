#include "grascat/ksubset.hpp"

#include <algorithm>
#include <sstream>

#include "grascat/error.hpp"

namespace grascat {

bool KSubset::contains(int v) const { return std::binary_search(elems.begin(), elems.end(), v); }

KSubset make_ksubset(int n, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    require(elems[i] >= 1 && elems[i] <= n, ErrorCode::OutOfRange,
            "subset entry " + std::to_string(elems[i]) + " outside [1, " + std::to_string(n) + "]");
    require(i == 0 || elems[i] != elems[i - 1], ErrorCode::OutOfRange, "subset entries must be distinct");
  }
  return KSubset{n, std::move(elems)};
}

KSubset parse_ksubset(int n, const std::string& text) {
  std::vector<int> elems;
  if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) elems.push_back(std::stoi(item));
  } else {
    for (char c : text) {
      require(c >= '0' && c <= '9', ErrorCode::ParseError, "bad subset label '" + text + "'");
      elems.push_back(c - '0');
    }
  }
  return make_ksubset(n, std::move(elems));
}

std::string label(const KSubset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.elems.size(); ++i) {
    if (s.n > 9 && i > 0) out += ',';
    out += std::to_string(s.elems[i]);
  }
  return out;
}

std::vector<int> cyclic_interval(int a, int b, int n) {
  std::vector<int> out;
  for (int v = a; v <= b; ++v) out.push_back(wrap(v, n));
  return out;
}

std::vector<CyclicRun> cyclic_runs(const KSubset& s) {
  std::vector<CyclicRun> runs;
  if (s.elems.empty()) return runs;
  if (s.k() == s.n) return {CyclicRun{1, s.n}};
  for (int v : s.elems) {
    if (s.contains(wrap(v - 1, s.n))) continue;
    int len = 0;
    while (len < s.n && s.contains(wrap(v + len, s.n))) ++len;
    runs.push_back(CyclicRun{v, len});
  }
  return runs;
}

}  // namespace grascat
