// SPDX-License-Identifier: MIT
//
// helpers.hpp
//
// Shared fixtures for the unit tests.

#ifndef HTT_TEST_HELPERS_HPP
#define HTT_TEST_HELPERS_HPP

#include "htt/graded.hpp"

#include <string>

namespace htt::test
{

inline std::string source_path(const std::string& rel) { return std::string(HTT_SOURCE_DIR) + "/" + rel; }

inline Vector vec(std::initializer_list<std::pair<Word, long>> terms)
{
    Vector v;
    for (const auto& [w, c] : terms) v.add(w, Scalar(c));
    return v;
}

// The image of one input word, or zero.
inline Vector image(const MultiMap& m, const Word& in)
{
    const Vector* v = m.find(in);
    return v ? *v : Vector();
}

}  // namespace htt::test

#endif
