#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "eltlab/matrix.hpp"
#include "eltlab/polynomial.hpp"
#include "eltlab/scalar.hpp"

namespace test {

inline eltlab::Scalar S(const char* text) { return eltlab::Scalar::parse(text); }
inline eltlab::IntScalar SZ(const char* text) { return eltlab::IntScalar::parse(text); }
inline eltlab::Polynomial P(const char* text) { return eltlab::Polynomial::parse(text); }

template <eltlab::LayerRing L = eltlab::Rational>
eltlab::BasicMatrix<L> M(std::initializer_list<std::initializer_list<const char*>> rows) {
    eltlab::BasicMatrix<L> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const char* e : r) m(i, j++) = eltlab::BasicScalar<L>::parse(e);
        ++i;
    }
    return m;
}

}  // namespace test
