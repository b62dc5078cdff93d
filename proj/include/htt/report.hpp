// SPDX-License-Identifier: MIT
//
// report.hpp
//
// Text reports: a machine section of key=value lines in insertion order,
// then free-form detail lines. Output is byte-deterministic.

#ifndef HTT_REPORT_HPP
#define HTT_REPORT_HPP

#include "htt/ainfty.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace htt
{

class Report
{
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, long value) { set(key, std::to_string(value)); }
    void flag(const std::string& key, bool ok) { set(key, ok ? "pass" : "fail"); }
    void detail(const std::string& line) { detail_.push_back(line); }

    // Appends `prefix.<n>=<nnz>` per arity and a detail line for the first
    // offender. Returns true when every residual is zero.
    bool residuals(const std::string& prefix, const ResidualReport& r);

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    // Value of a key, or empty when absent.
    std::string value(const std::string& key) const;
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::string> detail_;
};

}  // namespace htt

#endif
