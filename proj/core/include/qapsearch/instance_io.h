#ifndef QAPSEARCH_INSTANCE_IO_H_
#define QAPSEARCH_INSTANCE_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qapsearch/instance.h"
#include "qapsearch/permutation.h"

namespace qapsearch {

// Reads a QAPLIB instance: n, then n^2 integers of the first matrix, then
// n^2 integers of the second, separated by arbitrary whitespace. The first
// matrix is bound to the flow role and the second to distance.
//
// Throws MalformedInstanceError (token count), ParseError (non-integer
// token) or DomainError (n < 2, negative entries).
Instance ParseInstance(std::istream& in, std::string name);

// Reads a file and names the instance after its stem ("tai30a.dat" ->
// "tai30a").
Instance LoadInstance(const std::filesystem::path& path);

// Best-known objective values keyed by instance name. All costs are
// strictly positive.
class BestKnownRegistry {
 public:
  // Throws DomainError for cost <= 0.
  void Set(const std::string& name, std::int64_t cost);
  std::optional<std::int64_t> Find(const std::string& name) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::int64_t> entries_;
};

struct RegistryLoad {
  BestKnownRegistry registry;
  // One message per duplicate name ("line 2: duplicate entry 'a', ...").
  std::vector<std::string> warnings;
};

// Parses "name,cost" lines. Blank lines are skipped. Duplicates: last wins,
// with a warning. Throws ParseError naming the line for malformed lines and
// DomainError for cost <= 0.
RegistryLoad LoadBestKnown(std::istream& in);
RegistryLoad LoadBestKnown(const std::filesystem::path& path);

struct SolutionMetadata {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string config_digest;

  friend bool operator==(const SolutionMetadata&,
                         const SolutionMetadata&) = default;
};

struct SolutionRecord {
  std::string instance_name;
  Permutation permutation;
  std::int64_t cost = 0;
  SolutionMetadata metadata;

  friend bool operator==(const SolutionRecord&,
                         const SolutionRecord&) = default;
};

// Writes "name\nn\ncost\np_1 ... p_n\n" with 1-based units. The cost is
// re-evaluated against `inst` first; a mismatch throws IntegrityError and
// nothing is written.
void WriteSolution(const SolutionRecord& record, const Instance& inst,
                   std::ostream& out);

struct ParsedSolution {
  std::string instance_name;
  Permutation permutation;
  std::int64_t cost = 0;
};

// Inverse of WriteSolution. Throws ParseError on malformed input.
ParsedSolution ReadSolution(std::istream& in);

}  // namespace qapsearch

#endif  // QAPSEARCH_INSTANCE_IO_H_
