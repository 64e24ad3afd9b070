#pragma once

// Brute-force and seeded-random discovery of small witness instances.
// Enumeration is deterministic given (spec, seed): exhaustive walks are
// lexicographic over the scalar pool, sampling uses the splitmix64 stream
// documented below. Corpus entries are content-addressed documents whose
// stored verdicts reproduce on reload.

#include <cstdint>
#include <functional>
#include <map>
#include <variant>

#include "bihom/checks.hpp"
#include "bihom/io.hpp"
#include "bihom/operators.hpp"

namespace bihom {

// splitmix64. State advance adds 0x9E3779B97F4A7C15; the output mix is
// z ^= z >> 30, z *= 0xBF58476D1CE4E5B9; z ^= z >> 27, z *= 0x94D049BB133111EB;
// z ^= z >> 31. These constants are part of the corpus format: reruns and
// reimplementations must reproduce identical candidate streams.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound);
};

struct Unknown {
    enum class Kind { Op, Map };
    enum class Shape { Free, ScalarTimesIdentity };
    Kind kind = Kind::Op;
    std::string name;
    Shape shape = Shape::Free;
};

// Base for searches over module-level data; the algebra inside the bimodule
// plays the role of A.
struct ModuleSearchBase {
    BimodulePresentation bimodule;
    std::optional<BilinearOp> cocycle;
    std::optional<LinearMap> pi;
};

using SearchBase = std::variant<AlgebraPresentation, ModuleSearchBase>;

enum class SearchMode { Auto, Exhaustive, Sample };

inline constexpr std::uint64_t kExhaustiveCap = std::uint64_t(1) << 24;

struct SearchSpec {
    FieldDescriptor field;
    int dim = 1;
    std::string target;  // checker name
    SearchBase base;
    std::vector<Unknown> unknowns;
    std::vector<Scalar> pool;  // empty = whole field (prime fields only)
    std::uint64_t budget = 1;
    std::uint64_t seed = 0;
    SearchMode mode = SearchMode::Auto;

    void validate() const;
    std::vector<Scalar> effective_pool() const;
    std::uint64_t entry_count() const;
    // |pool|^entries, saturating.
    std::uint64_t candidate_count() const;
    bool runs_exhaustively() const;
    std::string digest() const;
};

struct CorpusEntry {
    SearchBase value;
    std::map<std::string, bool> verdicts;  // checker name -> pass
    std::string spec_digest;
    std::uint64_t candidate_index = 0;
};

const std::vector<std::string>& checker_names();
// UnknownCheckerError for unregistered names; MissingComponentError when the
// candidate lacks what the checker consumes.
CheckReport run_checker(const std::string& name, const SearchBase& candidate);

// Deterministic candidate walk; fn returns false to stop early.
void enumerate(const SearchSpec& spec,
               const std::function<bool(std::uint64_t, const SearchBase&)>& fn);

// All (or the first max_witnesses when nonzero) candidates passing the named
// checker, each with the full map of applicable checker verdicts.
std::vector<CorpusEntry> search_witnesses(const SearchSpec& spec, const std::string& checker,
                                          std::uint64_t max_witnesses = 0);

std::string serialize_corpus_entry(const CorpusEntry& entry);
CorpusEntry parse_corpus_entry(const std::string& text);

PresentationDocument document_of(const SearchBase& value);

// JSON search-spec documents for the CLI: field/dim/target/base/unknowns,
// optional pool, budget, seed, mode.
SearchSpec parse_search_spec(const std::string& text);

}  // namespace bihom
