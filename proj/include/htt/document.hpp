// SPDX-License-Identifier: MIT
//
// document.hpp
//
// The JSON interchange format. Scalars are exact strings, basis elements
// are [degree, index] pairs, and unknown fields are rejected. Parsing
// selects the ground field for the session.

#ifndef HTT_DOCUMENT_HPP
#define HTT_DOCUMENT_HPP

#include "htt/ainfty.hpp"
#include "htt/kernels.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace htt
{

inline constexpr int kFormatVersion = 1;

// Input error; `location` is a JSON pointer into the document.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& location, const std::string& message)
        : std::runtime_error(location + ": " + message), location_(location)
    {
    }
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

struct ModuleData
{
    ModulePtr module;
    std::vector<std::string> labels;  // empty or one per basis id

    bool operator==(const ModuleData& o) const;
};

struct StructureData
{
    std::string module;
    MultiMap differential;
    std::map<int, MultiMap> products;

    bool operator==(const StructureData&) const = default;
};

struct RetractData
{
    std::string structure;
    std::string small_module;
    MultiMap small_differential;
    MultiMap f;
    MultiMap g;
    MultiMap h;

    bool operator==(const RetractData&) const = default;
};

struct MorphismData
{
    std::string source;  // structure names
    std::string target;
    std::map<int, MultiMap> components;

    bool operator==(const MorphismData&) const = default;
};

// Flanks are a morphism name, "identity:<structure>" or "compose:<g>,<f>".
struct HomotopyData
{
    std::string from;
    std::string to;
    std::map<int, MultiMap> components;

    bool operator==(const HomotopyData&) const = default;
};

struct TransferData
{
    std::string method;
    int arity = 0;
    std::string hpl_vs_kernels;  // verdict, empty when not compared
    std::string extraction;      // "canonical" or "non-canonical", may be empty

    bool operator==(const TransferData&) const = default;
};

struct Document
{
    int format_version = kFormatVersion;
    unsigned long modulus = 0;  // 0 for the rationals
    int truncation = 1;
    std::map<std::string, ModuleData> modules;
    std::map<std::string, StructureData> structures;
    std::optional<RetractData> retract;
    std::map<std::string, MorphismData> morphisms;
    std::map<std::string, HomotopyData> homotopies;
    std::optional<TransferData> transfer;

    bool operator==(const Document&) const = default;
};

// Throws ParseError. Sets the session field from the document.
Document parse_document(const std::string& text);
std::string serialize_document(const Document& doc);

// Objects assembled from a document; throw ParseError on dangling names.
AInfinityPtr build_structure(const Document& doc, const std::string& name);
DeformationRetract build_retract(const Document& doc);
MorphismPtr build_morphism(const Document& doc, const std::string& name);
std::shared_ptr<const AInftyHomotopy> build_homotopy(const Document& doc, const std::string& name);

// Display name of a basis id, using labels when present.
std::string basis_name(const ModuleData& m, int id);

}  // namespace htt

#endif
