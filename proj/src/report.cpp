// SPDX-License-Identifier: MIT

#include "htt/report.hpp"

#include <sstream>

namespace htt
{

void Report::set(const std::string& key, const std::string& value)
{
    auto [it, inserted] = index_.try_emplace(key, entries_.size());
    if (inserted)
        entries_.emplace_back(key, value);
    else
        entries_[it->second].second = value;
}

bool Report::residuals(const std::string& prefix, const ResidualReport& r)
{
    for (const auto& [n, m] : r.residuals) set(prefix + "." + std::to_string(n), static_cast<long>(m.nnz()));
    if (r.all_zero()) return true;
    detail(prefix + " (" + r.relation + "): first offender " + r.first_offender());
    return false;
}

std::string Report::value(const std::string& key) const
{
    auto it = index_.find(key);
    return it == index_.end() ? std::string() : entries_[it->second].second;
}

std::string Report::str() const
{
    std::ostringstream os;
    os << "# machine\n";
    for (const auto& [k, v] : entries_) os << k << '=' << v << '\n';
    os << "# detail\n";
    for (const auto& line : detail_) os << line << '\n';
    return os.str();
}

}  // namespace htt
