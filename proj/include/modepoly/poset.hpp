#pragma once

#include "modepoly/graph.hpp"
#include "modepoly/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace modepoly {

// Strict partial order on a finite labelled set, given by generating pairs
// (lower, upper). Construction validates acyclicity and computes the
// transitive reduction once; all algorithms read only the reduction.
class Poset {
public:
    using Pair = std::pair<std::size_t, std::size_t>; // (lower, upper)

    Poset() = default;
    // Throws InvalidInput on unknown/duplicate elements, reflexive pairs or cycles.
    Poset(std::vector<std::string> elements,
          const std::vector<std::pair<std::string, std::string>>& relations);
    static Poset from_indices(std::vector<std::string> elements, std::vector<Pair> relations);

    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<std::string>& elements() const noexcept { return elements_; }
    std::size_t index_of(const std::string& label) const;

    // Transitive reduction, sorted by (upper, lower).
    const std::vector<Pair>& covers() const noexcept { return covers_; }
    // Elements covered by v / covering v.
    const std::vector<std::size_t>& lower_covers(std::size_t v) const { return below_.at(v); }
    const std::vector<std::size_t>& upper_covers(std::size_t v) const { return above_.at(v); }

    // Strict order test by search along covers.
    bool less(std::size_t a, std::size_t b) const;

    // Same order under a relabelling: element i moves to position perm[i].
    Poset permuted(const std::vector<std::size_t>& perm) const;

private:
    void build(std::vector<Pair> relations);

    std::vector<std::string> elements_;
    std::vector<Pair> covers_;
    std::vector<std::vector<std::size_t>> below_;
    std::vector<std::vector<std::size_t>> above_;
};

// x above y iff x is in c and y ~ x. A partial order exactly when c is
// independent; throws NotIndependent otherwise. Elements follow g's node order.
Poset poset_from_modes(const Graph& g, const ModeSet& c);

inline constexpr std::uint64_t kDefaultMaxIdeals = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kDefaultMaxExtensions = 100000;
inline constexpr std::size_t kMaxNaiveElements = 10;
inline constexpr std::size_t kMaxIdealElements = 64;

// Number of linear extensions by memoised recursion over order ideals:
// f(empty) = 1, f(D) = sum over maximal m of D of f(D \ {m}).
// Throws BudgetExceeded when more than max_ideals ideals would be stored.
BigInt count_linear_extensions(const Poset& p, std::uint64_t max_ideals = kDefaultMaxIdeals);

// Independent counter: forward sweep over ideals rank by rank, adding one
// minimal element of the complement at a time. Same budget semantics.
BigInt count_linear_extensions_layered(const Poset& p, std::uint64_t max_ideals = kDefaultMaxIdeals);

// Brute force over all permutations; at most kMaxNaiveElements elements.
BigInt count_linear_extensions_naive(const Poset& p);

// Every ascending order compatible with p (element indices, lowest first),
// in lexicographic order. Throws BudgetExceeded beyond max_extensions.
std::vector<std::vector<std::size_t>> enumerate_extensions(
    const Poset& p, std::uint64_t max_extensions = kDefaultMaxExtensions);

bool is_linear_extension(const Poset& p, const std::vector<std::size_t>& order);

// |C|! * |V \ C|!, a lower bound on the extension count of poset_from_modes.
BigInt extension_lower_bound(const Graph& g, const ModeSet& c);

} // namespace modepoly
