#ifndef COMPDI_RECOGNIZE_HPP
#define COMPDI_RECOGNIZE_HPP

#include "compdi/digraph.hpp"
#include "compdi/implication.hpp"
#include "compdi/knotting.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace compdi {

// x precedes y precedes z, and one of the two ordering implications fails.
struct Triple {
    Vertex x = 0, y = 0, z = 0;
    friend bool operator==(const Triple&, const Triple&) = default;
};

// A class equal to its own inverse, with the length-2 circuit proving it.
struct SelfInverseClass {
    ClassId id = 0;
    Circuit circuit;
};

using Witness = std::variant<SelfInverseClass, Triple, Walk>;

struct RecognitionResult {
    enum class Verdict { Comparability, NotComparability };
    Verdict verdict = Verdict::NotComparability;
    std::optional<Ordering> ordering;
    std::optional<Witness> witness;

    bool comparability() const noexcept { return verdict == Verdict::Comparability; }
};

// How the line-9 "arbitrary" class is picked when no transitively implied
// class is pending. All policies are deterministic.
struct ChoicePolicy {
    enum class Kind { SmallestId, LargestId, Shuffled };
    Kind kind = Kind::SmallestId;
    std::uint64_t seed = 0;

    static ChoicePolicy smallest() { return {Kind::SmallestId, 0}; }
    static ChoicePolicy largest() { return {Kind::LargestId, 0}; }
    static ChoicePolicy shuffled(std::uint64_t seed) { return {Kind::Shuffled, seed}; }
};

// The forcing set T built by the recognizer: whole nontrivial classes, one of
// each inverse pair, in the order they were chosen.
struct ForcingSet {
    std::vector<ClassId> chosen;
    std::vector<std::uint8_t> pair_member;  // n*n, 1 when (x,y) in T
};

// Throws NotSemicomplete. Throws std::logic_error if T turns out cyclic,
// which would contradict the correctness argument.
RecognitionResult recognize_semicomplete(const Digraph& d, ChoicePolicy policy = {});
RecognitionResult recognize_semicomplete(const Digraph& d, ChoicePolicy policy, ForcingSet* trace);

// First violating triple in lexicographic position order, or nullopt when o is
// a comparability ordering. Throws std::invalid_argument if sizes differ.
std::optional<Triple> verify_ordering(const Digraph& d, const Ordering& o);

RecognitionResult graph_comparability(const Graph& g, std::size_t component_limit = default_component_limit);

struct ForceViolation {
    ClassId id = 0;
    Pair agreeing;
    Pair disagreeing;
};

// Classes whose pairs are split by the ordering.
std::vector<ForceViolation> audit_prop_force(const Digraph& d, const Ordering& o, const ClassPartition& part);

std::string format_witness(const Digraph& d, const Witness& w);

}  // namespace compdi

#endif  // COMPDI_RECOGNIZE_HPP
