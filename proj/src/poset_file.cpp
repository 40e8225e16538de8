#include "ocpoly/poset_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "ocpoly/error.hpp"

namespace ocpoly {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

int parse_int(std::string_view word, int line) {
  int value = 0;
  auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size())
    parse_fail(line, "expected an integer, got '" + std::string(word) + "'");
  return value;
}

}  // namespace

PosetFile parse_poset_file(std::string_view text, const Limits& limits) {
  int d = 0;
  std::vector<Cover> covers;
  // unordered edge -> (label, line)
  std::map<std::pair<int, int>, std::pair<char, int>> labels;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;

    const std::string_view keyword = words[0];
    if (keyword == "poset") {
      if (words.size() != 2) parse_fail(line_no, "expected 'poset <d>'");
      if (d != 0) parse_fail(line_no, "duplicate 'poset' line");
      d = parse_int(words[1], line_no);
      if (d < 1) parse_fail(line_no, "d must be positive");
    } else if (keyword == "cover") {
      if (d == 0) parse_fail(line_no, "'cover' before 'poset'");
      if (words.size() != 3) parse_fail(line_no, "expected 'cover <i> <j>'");
      covers.push_back({parse_int(words[1], line_no), parse_int(words[2], line_no)});
    } else if (keyword == "partition") {
      if (d == 0) parse_fail(line_no, "'partition' before 'poset'");
      if (words.size() != 4 || (words[1] != "o" && words[1] != "c"))
        parse_fail(line_no, "expected 'partition o|c <i> <j>'");
      int i = parse_int(words[2], line_no), j = parse_int(words[3], line_no);
      auto key = std::minmax(i, j);
      const char label = words[1][0];
      auto [it, inserted] = labels.emplace(key, std::make_pair(label, line_no));
      if (!inserted && it->second.first != label)
        fail(ErrorKind::ConflictingAssignment, "line " + std::to_string(line_no) + ": edge {" +
                                                   std::to_string(key.first) + "," + std::to_string(key.second) +
                                                   "} already assigned on line " +
                                                   std::to_string(it->second.second));
    } else {
      parse_fail(line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (d == 0) fail(ErrorKind::ParseError, "missing 'poset <d>' line");

  PosetFile file;
  file.source = std::string(text);
  file.poset = new_poset(d, covers, limits);
  if (labels.empty()) {
    file.partition = make_partition(file.poset, file.poset.covers());
    return file;
  }
  file.explicit_partition = true;
  for (const auto& [edge, label] : labels)
    if (!file.poset.has_cover(edge.first, edge.second) && !file.poset.has_cover(edge.second, edge.first))
      fail(ErrorKind::UnknownEdge, "line " + std::to_string(label.second) + ": {" + std::to_string(edge.first) +
                                       "," + std::to_string(edge.second) + "} is not a cover");
  std::vector<Cover> order_edges;
  for (const auto& c : file.poset.covers()) {
    auto it = labels.find(std::minmax(c.lower, c.upper));
    if (it == labels.end())
      fail(ErrorKind::PartialPartition, "cover " + std::to_string(c.lower) + " " + std::to_string(c.upper) +
                                            " has no partition line");
    if (it->second.first == 'o') order_edges.push_back(c);
  }
  file.partition = make_partition(file.poset, order_edges);
  return file;
}

PosetFile read_poset_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_poset_file(buffer.str(), limits);
}

std::string format_poset_file(const EdgePartition& partition) {
  const Poset& p = partition.base();
  std::string out = "poset " + std::to_string(p.size()) + "\n";
  for (const auto& c : p.covers()) out += "cover " + std::to_string(c.lower) + " " + std::to_string(c.upper) + "\n";
  for (const auto& c : partition.order_edges())
    out += "partition o " + std::to_string(c.lower) + " " + std::to_string(c.upper) + "\n";
  for (const auto& c : partition.chain_edges())
    out += "partition c " + std::to_string(c.lower) + " " + std::to_string(c.upper) + "\n";
  return out;
}

}  // namespace ocpoly
