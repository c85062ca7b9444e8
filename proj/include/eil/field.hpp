#ifndef EIL_FIELD_HPP
#define EIL_FIELD_HPP

#include <stdexcept>
#include <string>

namespace eil {

// Coefficient field for homology: the rationals or a prime field F_p.
struct FieldSpec {
    bool rational = true;
    int p = 0;

    static FieldSpec rationals() { return FieldSpec{true, 0}; }
    static FieldSpec prime(int p);

    std::string name() const { return rational ? "Q" : "F" + std::to_string(p); }
    bool operator==(const FieldSpec& o) const { return rational == o.rational && p == o.p; }
};

inline FieldSpec FieldSpec::prime(int p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("field characteristic must be a prime");
    return FieldSpec{false, p};
}

} // namespace eil

#endif
