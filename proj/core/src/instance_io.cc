#include "qapsearch/instance_io.h"

#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "qapsearch/cost.h"
#include "qapsearch/error.h"

namespace qapsearch {

namespace {

// Instances beyond this size are rejected before allocating.
constexpr std::int64_t kMaxInstanceSize = 1 << 14;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::int64_t ParseInteger(std::string_view token, std::size_t offset) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("invalid integer token '" + std::string(token) +
                     "' at byte offset " + std::to_string(offset));
  }
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

Instance ParseInstance(std::istream& in, std::string name) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());

  struct Token {
    std::string_view text;
    std::size_t offset;
  };
  std::vector<Token> tokens;
  for (std::size_t pos = 0; pos < text.size();) {
    if (IsSpace(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !IsSpace(text[pos])) ++pos;
    tokens.push_back({std::string_view(text).substr(start, pos - start), start});
  }
  if (tokens.empty()) {
    throw MalformedInstanceError("empty instance stream", 0);
  }

  const std::int64_t n = ParseInteger(tokens[0].text, tokens[0].offset);
  if (n < 2 || n > kMaxInstanceSize) {
    throw DomainError("instance size must be in [2, " +
                      std::to_string(kMaxInstanceSize) + "], got " +
                      std::to_string(n));
  }
  const auto cells = static_cast<std::size_t>(n * n);
  const std::size_t expected = 1 + 2 * cells;
  if (tokens.size() != expected) {
    const std::size_t offset = tokens.size() < expected
                                   ? text.size()
                                   : tokens[expected].offset;
    throw MalformedInstanceError(
        "malformed instance: expected 1+2*" + std::to_string(n) + "^2 = " +
            std::to_string(expected) + " tokens, got " +
            std::to_string(tokens.size()) + " (byte offset " +
            std::to_string(offset) + ")",
        offset);
  }

  auto read_matrix = [&](std::size_t first) {
    std::vector<std::int64_t> values(cells);
    for (std::size_t k = 0; k < cells; ++k) {
      const Token& t = tokens[first + k];
      values[k] = ParseInteger(t.text, t.offset);
    }
    return SquareMatrix(static_cast<int>(n), std::move(values));
  };
  SquareMatrix flow = read_matrix(1);
  SquareMatrix distance = read_matrix(1 + cells);
  return Instance(std::move(name), std::move(flow), std::move(distance));
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseInstance(in, path.stem().string());
}

void BestKnownRegistry::Set(const std::string& name, std::int64_t cost) {
  if (cost <= 0) {
    throw DomainError("best-known cost for '" + name +
                      "' must be positive, got " + std::to_string(cost));
  }
  entries_[name] = cost;
}

std::optional<std::int64_t> BestKnownRegistry::Find(
    const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

RegistryLoad LoadBestKnown(std::istream& in) {
  RegistryLoad load;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const std::string_view body = Trim(line);
    if (body.empty()) continue;
    const auto comma = body.find(',');
    const std::string where = "line " + std::to_string(line_no);
    if (comma == std::string_view::npos ||
        body.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(where + ": expected 'name,cost', got '" +
                       std::string(body) + "'");
    }
    const std::string name(Trim(body.substr(0, comma)));
    const std::string_view cost_text = Trim(body.substr(comma + 1));
    if (name.empty()) throw ParseError(where + ": empty instance name");
    std::int64_t cost = 0;
    try {
      cost = ParseInteger(cost_text, comma + 1);
    } catch (const ParseError&) {
      throw ParseError(where + ": invalid cost '" + std::string(cost_text) +
                       "'");
    }
    if (cost <= 0) {
      throw DomainError(where + ": best-known cost for '" + name +
                        "' must be positive, got " + std::to_string(cost));
    }
    if (auto previous = load.registry.Find(name)) {
      load.warnings.push_back(where + ": duplicate entry '" + name +
                              "' replaces " + std::to_string(*previous));
    }
    load.registry.Set(name, cost);
  }
  return load;
}

RegistryLoad LoadBestKnown(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return LoadBestKnown(in);
}

void WriteSolution(const SolutionRecord& record, const Instance& inst,
                   std::ostream& out) {
  if (record.permutation.size() != inst.size()) {
    throw IntegrityError("solution for '" + record.instance_name + "' has " +
                         std::to_string(record.permutation.size()) +
                         " units, instance has " +
                         std::to_string(inst.size()));
  }
  const std::int64_t actual = FullCost(inst, record.permutation);
  if (actual != record.cost) {
    throw IntegrityError("solution for '" + record.instance_name +
                         "' claims cost " + std::to_string(record.cost) +
                         " but evaluates to " + std::to_string(actual));
  }
  std::ostringstream text;
  text << record.instance_name << '\n'
       << record.permutation.size() << '\n'
       << record.cost << '\n'
       << record.permutation.ToString() << '\n';
  out << text.str();
}

ParsedSolution ReadSolution(std::istream& in) {
  ParsedSolution parsed;
  std::string line;
  if (!std::getline(in, line) || Trim(line).empty()) {
    throw ParseError("solution: missing instance name");
  }
  parsed.instance_name = std::string(Trim(line));

  auto next_integer = [&](const char* what) {
    if (!std::getline(in, line)) {
      throw ParseError(std::string("solution: missing ") + what);
    }
    return ParseInteger(Trim(line), 0);
  };
  const std::int64_t n = next_integer("size");
  parsed.cost = next_integer("cost");
  if (n < 2 || n > kMaxInstanceSize) {
    throw ParseError("solution: bad size " + std::to_string(n));
  }

  if (!std::getline(in, line)) throw ParseError("solution: missing permutation");
  std::istringstream units_in(line);
  std::vector<int> units;
  std::string token;
  while (units_in >> token) {
    units.push_back(static_cast<int>(ParseInteger(token, 0)));
  }
  if (static_cast<std::int64_t>(units.size()) != n) {
    throw ParseError("solution: expected " + std::to_string(n) +
                     " units, got " + std::to_string(units.size()));
  }
  try {
    parsed.permutation = Permutation::FromOneBased(units);
  } catch (const DomainError& e) {
    throw ParseError(std::string("solution: ") + e.what());
  }
  return parsed;
}

}  // namespace qapsearch
