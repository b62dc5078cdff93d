// SPDX-License-Identifier: MIT

#include "helpers.hpp"
#include "htt/document.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace htt;

namespace
{

std::string read(const std::string& rel)
{
    std::ifstream in(htt::test::source_path(rel));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A one-module document with a body spliced into the top-level object.
std::string doc(const std::string& extra, const std::string& field = R"("field": "rational")")
{
    return R"({"format_version": 1, )" + field +
           R"(, "truncation": 2, "modules": {"V": {"dims": {"0": 1, "1": 1}}})" + extra + "}";
}

std::string error_location(const std::string& text)
{
    try
    {
        parse_document(text);
    }
    catch (const ParseError& e)
    {
        return e.location();
    }
    return "no error";
}

}  // namespace

TEST_SUITE("document")
{
    TEST_CASE("shipped documents round trip")
    {
        for (const char* f : {"data/massey.json", "data/forms.json", "tests/data/forms_mod5.json"})
        {
            const Document a = parse_document(read(f));
            const std::string text = serialize_document(a);
            const Document b = parse_document(text);
            CHECK(a == b);
            CHECK(serialize_document(b) == text);
        }
        Field::set_modulus(0);
    }

    TEST_CASE("objects are assembled from names")
    {
        const Document d = parse_document(read("data/massey.json"));
        const AInfinityPtr a = build_structure(d, "massey");
        CHECK(check_structure(*a, 3).all_zero());
        const DeformationRetract r = build_retract(d);
        CHECK(r.violations().empty());
        CHECK(basis_name(d.modules.at("V"), 8) == "m'");
        CHECK_THROWS_AS(build_structure(d, "nope"), ParseError);
        CHECK_THROWS_AS(build_morphism(d, "nope"), ParseError);
    }

    TEST_CASE("a minimal document")
    {
        const Document d = parse_document(doc(R"(, "structures": {"A": {"module": "V", "differential": [
            {"inputs": [[1, 0]], "output": [[[0, 0], "2/4"]]}]}})"));
        const StructureData& s = d.structures.at("A");
        CHECK(s.differential.find({1})->coefficient({0}) == Scalar::parse("1/2"));
        CHECK(s.products.empty());
    }

    TEST_CASE("input errors carry a location")
    {
        CHECK(error_location(doc(R"(, "extra": 1)")) == "/extra");
        CHECK(error_location(R"({"field": "rational", "truncation": 2, "modules": {}})") == "/format_version");
        CHECK(error_location(doc("", R"("field": "real")")) == "/field");
        CHECK(error_location(doc("", R"("field": "mod-p", "modulus": 4)")) == "/modulus");
        CHECK(error_location(doc(R"(, "structures": {"A": {"module": "V", "differential": [
            {"inputs": [[1, 0]], "output": [[[0, 0], 2]]}]}})")) ==
              "/structures/A/differential/0/output/0/1");
        CHECK(error_location(doc(R"(, "structures": {"A": {"module": "W", "differential": []}})")) ==
              "/structures/A/module");
        // Degree 1 to degree 1 is not a differential.
        CHECK(error_location(doc(R"(, "structures": {"A": {"module": "V", "differential": [
            {"inputs": [[1, 0]], "output": [[[1, 0], "1"]]}]}})")) ==
              "/structures/A/differential/0/output/0");
        CHECK(error_location(doc(R"(, "structures": {"A": {"module": "V", "differential": [
            {"inputs": [[2, 0]], "output": []}]}})")) ==
              "/structures/A/differential/0/inputs/0");
        CHECK(error_location("{ not json") .rfind("byte", 0) == 0);
    }

    TEST_CASE("a denominator vanishing mod p is an input error")
    {
        CHECK(error_location(doc(R"(, "structures": {"A": {"module": "V", "differential": [
            {"inputs": [[1, 0]], "output": [[[0, 0], "1/2"]]}]}})",
                                 R"("field": "mod-p", "modulus": 2)")) ==
              "/structures/A/differential/0/output/0/1");
        Field::set_modulus(0);
    }
}
