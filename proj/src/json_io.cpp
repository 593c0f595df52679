#include "heckelr/json_io.hpp"

#include <string>

namespace heckelr::json_io {

namespace {

std::vector<Int> int_array(const json& j, const char* what)
{
    if (!j.is_array())
        throw DomainError(std::string(what) + ": expected an array");
    std::vector<Int> out;
    for (const json& x : j) {
        if (!x.is_number_integer())
            throw DomainError(std::string(what) + ": expected integers");
        out.push_back(x.get<Int>());
    }
    return out;
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw DomainError(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

json to_json(const Multisegment& m)
{
    json out = json::array();
    for (const Segment& s : m.segments())
        out.push_back({s.start(), s.end()});
    return out;
}

json to_json(const Symbol& s)
{
    return {{"top", s.top().entries()}, {"bottom", s.bottom().entries()}};
}

json to_json(const PairStructure& ps)
{
    json pairs = json::array();
    for (const Pair& p : ps.pairs)
        pairs.push_back({p.source, p.target});
    return {{"fixed", ps.fixed}, {"pairs", pairs}};
}

json to_json(const Expansion& e)
{
    json terms = json::array();
    for (const ExpansionTerm& t : e.terms)
        terms.push_back({{"symbol", to_json(t.symbol)}, {"n", t.swaps}, {"multisegment", to_json(t.factor)}});
    return {{"offset", e.offset}, {"terms", terms}};
}

json to_json(const DrinfeldResult& d, Int rank)
{
    json polys = json::array();
    if (const auto* data = std::get_if<DrinfeldData>(&d))
        for (Int k = 1; k < data->rank(); ++k)
            polys.push_back({{"k", k}, {"root_exponents", data->roots(k)}});
    return {{"N", rank}, {"zero", std::holds_alternative<ZeroModule>(d)}, {"polynomials", polys}};
}

json to_json(const ChargedPartition& cp)
{
    return {{"lambda", cp.partition().parts()}, {"a", cp.charge()}};
}

Multisegment multisegment_from_json(const json& j)
{
    if (!j.is_array())
        throw DomainError("multisegment: expected an array");
    std::vector<Segment> segments;
    for (const json& s : j) {
        const std::vector<Int> ends = int_array(s, "segment");
        if (ends.size() != 2)
            throw DomainError("segment: expected [start, end]");
        segments.emplace_back(ends[0], ends[1]);
    }
    return Multisegment(std::move(segments));
}

Symbol symbol_from_json(const json& j)
{
    return Symbol(int_array(field(j, "top"), "top"), int_array(field(j, "bottom"), "bottom"));
}

std::pair<Int, std::vector<ExpansionTerm>> expansion_from_json(const json& j)
{
    const json& offset = field(j, "offset");
    if (!offset.is_number_integer())
        throw DomainError("offset: expected an integer");
    std::vector<ExpansionTerm> terms;
    for (const json& t : field(j, "terms")) {
        const json& n = field(t, "n");
        if (!n.is_number_integer())
            throw DomainError("n: expected an integer");
        terms.push_back({symbol_from_json(field(t, "symbol")), n.get<int>(),
                         multisegment_from_json(field(t, "multisegment"))});
    }
    return {offset.get<Int>(), std::move(terms)};
}

DrinfeldResult drinfeld_from_json(const json& j)
{
    const Int rank = field(j, "N").get<Int>();
    if (field(j, "zero").get<bool>())
        return ZeroModule{};
    DrinfeldData d(rank);
    for (const json& p : field(j, "polynomials")) {
        const Int k = field(p, "k").get<Int>();
        for (Int e : int_array(field(p, "root_exponents"), "root_exponents"))
            d.add_root(k, e);
    }
    return d;
}

} // namespace heckelr::json_io
