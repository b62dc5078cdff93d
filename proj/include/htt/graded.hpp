// SPDX-License-Identifier: MIT
//
// graded.hpp
//
// Graded modules, sparse linear combinations of tensor words and
// homogeneous multilinear maps. Every Koszul sign in the library is
// produced by koszul_sign through apply_block / tensor_product.

#ifndef HTT_GRADED_HPP
#define HTT_GRADED_HPP

#include "htt/scalar.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace htt
{

// A basis element named by (degree, index within degree).
struct BasisRef
{
    int degree = 0;
    int index = 0;
    friend auto operator<=>(const BasisRef&, const BasisRef&) = default;
};

// Finite-dimensional Z-graded module. Basis elements also carry a global id;
// ids increase with (degree, index), so lexicographic order on id words is
// lexicographic order on (degree, index) tuples.
class GradedModule
{
public:
    explicit GradedModule(std::map<int, int> dims, std::string name = "");

    const std::map<int, int>& dims() const { return dims_; }
    const std::string& name() const { return name_; }
    int total_dim() const { return static_cast<int>(refs_.size()); }
    int dim(int degree) const;

    int degree_of(int id) const { return refs_.at(static_cast<std::size_t>(id)).degree; }
    BasisRef ref(int id) const { return refs_.at(static_cast<std::size_t>(id)); }
    // Throws std::out_of_range for a missing element.
    int id(BasisRef r) const;

    bool same_shape(const GradedModule& other) const { return dims_ == other.dims_; }

private:
    std::map<int, int> dims_;
    std::string name_;
    std::vector<BasisRef> refs_;
    std::map<int, int> offset_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

ModulePtr make_module(std::map<int, int> dims, std::string name = "");

// A tensor word v_1 (x) ... (x) v_n of basis ids.
using Word = std::vector<int>;

int word_degree(const GradedModule& m, const Word& w);

// Sparse linear combination of tensor words, no stored zeros.
class Vector
{
public:
    using Terms = std::map<Word, Scalar>;

    Vector() = default;
    Vector(const Word& w, const Scalar& c) { add(w, c); }

    void add(const Word& w, const Scalar& c);
    void add(const Vector& v, const Scalar& c = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Scalar coefficient(const Word& w) const;

    friend bool operator==(const Vector& a, const Vector& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

// Tensor product of two combinations (no sign: elements, not maps).
Vector tensor(const Vector& a, const Vector& b);

// Homogeneous linear map defined on the words of length `arity` in the
// source. Outputs are words in the target; A-infinity components have
// length-one outputs, coalgebra blocks may have longer ones.
class MultiMap
{
public:
    using Table = std::map<Word, Vector>;

    MultiMap(ModulePtr source, ModulePtr target, int arity, int degree);

    static MultiMap identity(const ModulePtr& m);
    // Identity on basis ids between two modules whose degrees differ by `degree`.
    static MultiMap shift(const ModulePtr& from, const ModulePtr& to, int degree);

    // Throws std::invalid_argument on a wrong word length or inhomogeneous term.
    void add_term(const Word& in, const Word& out, const Scalar& c);
    void add_entry(const Word& in, const Vector& out, const Scalar& c = Scalar(1));
    void add(const MultiMap& other, const Scalar& c = Scalar(1));

    const ModulePtr& source() const { return source_; }
    const ModulePtr& target() const { return target_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }
    const Table& table() const { return table_; }
    const Vector* find(const Word& in) const;
    bool is_zero() const { return table_.empty(); }
    // Number of nonzero (input word, output word) coefficients.
    std::size_t nnz() const;

    // Same arity, degree and module shapes.
    bool same_shape(const MultiMap& other) const;

    friend bool operator==(const MultiMap& a, const MultiMap& b);
    friend MultiMap operator+(const MultiMap& a, const MultiMap& b);
    friend MultiMap operator-(const MultiMap& a, const MultiMap& b);
    friend MultiMap operator*(const Scalar& c, const MultiMap& a);

private:
    void require_shape(const MultiMap& other) const;

    ModulePtr source_;
    ModulePtr target_;
    int arity_;
    int degree_;
    Table table_;
};

// (-1)^(map_degree * sum(left_degrees)): the sign picked up by a map of
// degree map_degree moving past elements of the listed degrees.
Scalar koszul_sign(std::span<const int> left_degrees, int map_degree);

// Evaluates (f_1 (x) ... (x) f_k)(v_1 (x) ... (x) v_n). Throws
// std::invalid_argument when the arities do not add up to n.
Vector apply_block(const std::vector<const MultiMap*>& maps, const Word& inputs);

// The map f_1 (x) ... (x) f_k, built from the product of the supports.
// All factors must share source and target modules.
MultiMap tensor_product(const std::vector<const MultiMap*>& maps);

// f (x) ... (x) f, n factors.
MultiMap tensor_power(const MultiMap& f, int n);

// outer o inner. Every output word of inner must have length outer.arity().
MultiMap compose(const MultiMap& outer, const MultiMap& inner);

// outer o (1^{i-1} (x) inner (x) 1^{k-i}), 1 <= i <= k.
MultiMap insert(const MultiMap& outer, int position, const MultiMap& inner);

// Text form "[(d,i),(d,i)]" of a word, for reports.
std::string describe_word(const GradedModule& m, const Word& w);

}  // namespace htt

#endif
