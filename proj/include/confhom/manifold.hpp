#ifndef CONFHOM_MANIFOLD_HPP
#define CONFHOM_MANIFOLD_HPP

#include "confhom/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace confhom {

struct manifold_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cup product structure constants on compactly supported cohomology:
// mu : H_c^p(M;Q^w) x H_c^q(M;Q^w) -> H_c^{p+q}(M;Q), stored sparsely over the
// chosen bases. Absent entries are zero; when only one order of a pair is
// stored, the other is derived through graded commutativity.
class CupTable {
  public:
    struct Key {
        int p = 0;
        int a = 0;
        int q = 0;
        int b = 0;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    using Value = std::vector<std::pair<int, Rational>>;  // (target index, coefficient)

    void set(Key key, Value value);
    const std::map<Key, Value>& entries() const { return entries_; }

    // mu(a, b) with the graded-commutative fallback when only (b, a) is stored.
    Value lookup(int p, int a, int q, int b) const;

    friend bool operator==(const CupTable&, const CupTable&) = default;

  private:
    std::map<Key, Value> entries_;
};

// Finite algebraic presentation of the manifold M: dimension, openness,
// orientability, compactly supported Betti data (twisted and untwisted), the
// ordinary Betti numbers when supplied, and the cup table.
struct ManifoldData {
    std::string name;
    int dim = 0;
    bool open = false;
    bool orientable = true;
    std::map<int, int> hc_untwisted;          // degree p -> rank of H_c^p(M;Q)
    std::map<int, int> hc_twisted;            // degree p -> rank of H_c^p(M;Q^w)
    std::optional<std::map<int, int>> ordinary_betti;  // i -> rank of H_i(M;Q)
    CupTable cup;

    int hc_rank(int p) const;
    int hc_twisted_rank(int p) const;

    friend bool operator==(const ManifoldData&, const ManifoldData&) = default;
};

// Parses and fully validates a manifold document; throws manifold_error naming
// the offending field on schema or invariant violations.
ManifoldData load_manifold(const std::string& json_text);

// All invariant violations, as human-readable strings; empty means valid.
std::vector<std::string> validate_manifold(const ManifoldData& m);

std::string serialize_manifold(const ManifoldData& m);

// Hand-encoded fixtures; every returned fixture passes validate_manifold.
ManifoldData builtin_catalog(const std::string& name);
std::vector<std::string> catalog_names();

// true/false when decidable from the untwisted data (orientable M: all odd
// compactly supported ranks vanish if and only if M has even cohomology);
// nullopt for non-orientable input, where the caller must assert it.
std::optional<bool> has_even_cohomology(const ManifoldData& m);

}  // namespace confhom

#endif
