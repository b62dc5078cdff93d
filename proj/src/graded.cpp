// SPDX-License-Identifier: MIT

#include "htt/graded.hpp"

#include "htt/sign_hooks.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace htt
{

GradedModule::GradedModule(std::map<int, int> dims, std::string name) : name_(std::move(name))
{
    for (const auto& [degree, d] : dims)
    {
        if (d < 0) throw std::invalid_argument("negative dimension in degree " + std::to_string(degree));
        if (d == 0) continue;
        dims_[degree] = d;
        offset_[degree] = static_cast<int>(refs_.size());
        for (int i = 0; i < d; ++i) refs_.push_back({degree, i});
    }
}

int GradedModule::dim(int degree) const
{
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

int GradedModule::id(BasisRef r) const
{
    auto it = offset_.find(r.degree);
    if (it == offset_.end() || r.index < 0 || r.index >= dims_.at(r.degree))
        throw std::out_of_range("no basis element (" + std::to_string(r.degree) + "," +
                                std::to_string(r.index) + ") in module " + name_);
    return it->second + r.index;
}

ModulePtr make_module(std::map<int, int> dims, std::string name)
{
    return std::make_shared<const GradedModule>(std::move(dims), std::move(name));
}

int word_degree(const GradedModule& m, const Word& w)
{
    int d = 0;
    for (int id : w) d += m.degree_of(id);
    return d;
}

void Vector::add(const Word& w, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Vector::add(const Vector& v, const Scalar& c)
{
    if (c.is_zero()) return;
    for (const auto& [w, x] : v.terms_) add(w, c.is_one() ? x : x * c);
}

Scalar Vector::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Vector tensor(const Vector& a, const Vector& b)
{
    Vector out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
        {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

MultiMap::MultiMap(ModulePtr source, ModulePtr target, int arity, int degree)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), degree_(degree)
{
    if (!source_ || !target_) throw std::invalid_argument("MultiMap needs source and target modules");
    if (arity_ < 1) throw std::invalid_argument("MultiMap arity must be at least 1");
}

MultiMap MultiMap::identity(const ModulePtr& m) { return shift(m, m, 0); }

MultiMap MultiMap::shift(const ModulePtr& from, const ModulePtr& to, int degree)
{
    if (from->total_dim() != to->total_dim())
        throw std::invalid_argument("shift between modules of different dimension");
    MultiMap out(from, to, 1, degree);
    for (int id = 0; id < from->total_dim(); ++id) out.add_term({id}, {id}, Scalar(1));
    return out;
}

void MultiMap::add_term(const Word& in, const Word& out, const Scalar& c)
{
    if (c.is_zero()) return;
    if (static_cast<int>(in.size()) != arity_)
        throw std::invalid_argument("input word length " + std::to_string(in.size()) +
                                    " does not match arity " + std::to_string(arity_));
    if (out.empty()) throw std::invalid_argument("empty output word");
    if (word_degree(*source_, in) + degree_ != word_degree(*target_, out))
        throw std::invalid_argument("inhomogeneous term " + describe_word(*source_, in) + " -> " +
                                    describe_word(*target_, out) + " for map of degree " +
                                    std::to_string(degree_));
    auto [it, inserted] = table_.try_emplace(in);
    it->second.add(out, c);
    if (it->second.is_zero()) table_.erase(it);
}

void MultiMap::add_entry(const Word& in, const Vector& out, const Scalar& c)
{
    for (const auto& [w, x] : out.terms()) add_term(in, w, c.is_one() ? x : x * c);
}

void MultiMap::add(const MultiMap& other, const Scalar& c)
{
    require_shape(other);
    for (const auto& [in, out] : other.table_) add_entry(in, out, c);
}

const Vector* MultiMap::find(const Word& in) const
{
    auto it = table_.find(in);
    return it == table_.end() ? nullptr : &it->second;
}

std::size_t MultiMap::nnz() const
{
    std::size_t n = 0;
    for (const auto& [in, out] : table_) n += out.size();
    return n;
}

bool MultiMap::same_shape(const MultiMap& other) const
{
    return arity_ == other.arity_ && degree_ == other.degree_ && source_->same_shape(*other.source_) &&
           target_->same_shape(*other.target_);
}

void MultiMap::require_shape(const MultiMap& other) const
{
    if (!same_shape(other))
        throw std::invalid_argument("MultiMap shape mismatch (arity " + std::to_string(arity_) + "/" +
                                    std::to_string(other.arity_) + ", degree " + std::to_string(degree_) +
                                    "/" + std::to_string(other.degree_) + ")");
}

bool operator==(const MultiMap& a, const MultiMap& b)
{
    a.require_shape(b);
    return a.table_ == b.table_;
}

MultiMap operator+(const MultiMap& a, const MultiMap& b)
{
    MultiMap out = a;
    out.add(b);
    return out;
}

MultiMap operator-(const MultiMap& a, const MultiMap& b)
{
    MultiMap out = a;
    out.add(b, Scalar(-1));
    return out;
}

MultiMap operator*(const Scalar& c, const MultiMap& a)
{
    MultiMap out(a.source(), a.target(), a.arity(), a.degree());
    out.add(a, c);
    return out;
}

Scalar koszul_sign(std::span<const int> left_degrees, int map_degree)
{
    const long sum = std::accumulate(left_degrees.begin(), left_degrees.end(), 0L);
    long exponent = static_cast<long>(map_degree) * sum;
    switch (active_sign_mutant())
    {
    case SignMutant::koszul_trivial: exponent = 0; break;
    case SignMutant::koszul_negated: exponent += 1; break;
    case SignMutant::koszul_shifted: exponent = static_cast<long>(map_degree) * (sum + 1); break;
    case SignMutant::koszul_ignore_map_degree: exponent = sum; break;
    default: break;
    }
    return sign_of(exponent < 0 ? -exponent : exponent);
}

namespace
{

void require_common_modules(const std::vector<const MultiMap*>& maps)
{
    if (maps.empty()) throw std::invalid_argument("empty block of maps");
    for (const MultiMap* f : maps)
        if (!f->source()->same_shape(*maps.front()->source()) ||
            !f->target()->same_shape(*maps.front()->target()))
            throw std::invalid_argument("tensor factors must share source and target modules");
}

void expand_product(const std::vector<const MultiMap*>& maps, std::size_t j, Word& in, const Vector& acc,
                    int left_degree, MultiMap& out)
{
    if (j == maps.size())
    {
        out.add_entry(in, acc);
        return;
    }
    const MultiMap& f = *maps[j];
    const std::size_t mark = in.size();
    for (const auto& [w, value] : f.table())
    {
        const int left = left_degree;
        const Scalar sign = j == 0 ? Scalar(1) : koszul_sign(std::span<const int>(&left, 1), f.degree());
        Vector next;
        next.add(tensor(acc, value), sign);
        in.insert(in.end(), w.begin(), w.end());
        expand_product(maps, j + 1, in, next, left_degree + word_degree(*f.source(), w), out);
        in.resize(mark);
    }
}

}  // namespace

Vector apply_block(const std::vector<const MultiMap*>& maps, const Word& inputs)
{
    require_common_modules(maps);
    std::size_t total = 0;
    for (const MultiMap* f : maps) total += static_cast<std::size_t>(f->arity());
    if (total != inputs.size())
        throw std::invalid_argument("apply_block: arities sum to " + std::to_string(total) + " but " +
                                    std::to_string(inputs.size()) + " inputs given");
    Vector acc(Word{}, Scalar(1));
    std::size_t pos = 0;
    int left_degree = 0;
    for (std::size_t j = 0; j < maps.size(); ++j)
    {
        const MultiMap& f = *maps[j];
        Word part(inputs.begin() + static_cast<long>(pos), inputs.begin() + static_cast<long>(pos) + f.arity());
        const Vector* value = f.find(part);
        if (value == nullptr) return {};
        const int left = left_degree;
        const Scalar sign = j == 0 ? Scalar(1) : koszul_sign(std::span<const int>(&left, 1), f.degree());
        Vector next;
        next.add(tensor(acc, *value), sign);
        acc = std::move(next);
        left_degree += word_degree(*f.source(), part);
        pos += static_cast<std::size_t>(f.arity());
    }
    return acc;
}

MultiMap tensor_product(const std::vector<const MultiMap*>& maps)
{
    require_common_modules(maps);
    int arity = 0;
    int degree = 0;
    for (const MultiMap* f : maps)
    {
        arity += f->arity();
        degree += f->degree();
    }
    MultiMap out(maps.front()->source(), maps.front()->target(), arity, degree);
    Word in;
    expand_product(maps, 0, in, Vector(Word{}, Scalar(1)), 0, out);
    return out;
}

MultiMap tensor_power(const MultiMap& f, int n)
{
    std::vector<const MultiMap*> maps(static_cast<std::size_t>(n), &f);
    return tensor_product(maps);
}

MultiMap compose(const MultiMap& outer, const MultiMap& inner)
{
    if (!inner.target()->same_shape(*outer.source()))
        throw std::invalid_argument("compose: inner target differs from outer source");
    MultiMap out(inner.source(), outer.target(), inner.arity(), inner.degree() + outer.degree());
    for (const auto& [in, mid] : inner.table())
    {
        Vector acc;
        for (const auto& [w, c] : mid.terms())
        {
            if (static_cast<int>(w.size()) != outer.arity())
                throw std::invalid_argument("compose: intermediate word length " + std::to_string(w.size()) +
                                            " does not match outer arity " + std::to_string(outer.arity()));
            if (const Vector* v = outer.find(w)) acc.add(*v, c);
        }
        out.add_entry(in, acc);
    }
    return out;
}

MultiMap insert(const MultiMap& outer, int position, const MultiMap& inner)
{
    const int k = outer.arity();
    if (position < 1 || position > k)
        throw std::out_of_range("insert position " + std::to_string(position) + " outside 1.." + std::to_string(k));
    const MultiMap id = MultiMap::identity(inner.source());
    std::vector<const MultiMap*> block;
    for (int j = 1; j < position; ++j) block.push_back(&id);
    block.push_back(&inner);
    for (int j = position; j < k; ++j) block.push_back(&id);
    return compose(outer, tensor_product(block));
}

std::string describe_word(const GradedModule& m, const Word& w)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        if (i) os << ',';
        const BasisRef r = m.ref(w[i]);
        os << '(' << r.degree << ',' << r.index << ')';
    }
    os << ']';
    return os.str();
}

}  // namespace htt
