#include "fht/json_io.hpp"

#include <stdexcept>

#include "fht/verlinde.hpp"

namespace fht {

nlohmann::json weight_to_json(const Weight& w)
{
    return nlohmann::json(w.coords);
}

Weight weight_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw std::invalid_argument("weight_from_json: expected array");
    return Weight(j.get<IntVec>());
}

nlohmann::json formal_character_to_json(const FormalCharacter& c)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [w, m] : c.support())
        entries.push_back({{"weight", weight_to_json(w)}, {"mult", m}});
    return {{"kind", "formal"}, {"entries", entries}};
}

FormalCharacter formal_character_from_json(const nlohmann::json& j)
{
    if (j.value("kind", "") != "formal")
        throw std::invalid_argument("formal_character_from_json: kind mismatch");
    FormalCharacter c;
    for (const auto& e : j.at("entries"))
        c.add(weight_from_json(e.at("weight")), e.at("mult").get<std::int64_t>());
    return c;
}

nlohmann::json alternating_character_to_json(const AlternatingCharacter& c)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [w, m] : c.mults())
        entries.push_back({{"weight", weight_to_json(w)}, {"mult", m}});
    return {{"kind", "alternating"}, {"level", c.level()}, {"entries", entries}};
}

AlternatingCharacter alternating_character_from_json(const RootSystem& rs,
                                                     const nlohmann::json& j)
{
    if (j.value("kind", "") != "alternating")
        throw std::invalid_argument("alternating_character_from_json: kind mismatch");
    AlternatingCharacter c(rs, j.at("level").get<std::int64_t>());
    for (const auto& e : j.at("entries"))
        c.set(weight_from_json(e.at("weight")), e.at("mult").get<std::int64_t>());
    return c;
}

nlohmann::json periodic_character_to_json(const PeriodicCharacter& c)
{
    nlohmann::json entries = nlohmann::json::array();
    const auto& trans = c.transversal();
    for (size_t i = 0; i < trans.size(); ++i)
        entries.push_back({{"rep", weight_to_json(trans.rep(i))}, {"mult", c.mults()[i]}});
    return {{"kind", "periodic"}, {"level", c.level()}, {"entries", entries}};
}

PeriodicCharacter periodic_character_from_json(const RootSystem& rs, const nlohmann::json& j)
{
    if (j.value("kind", "") != "periodic")
        throw std::invalid_argument("periodic_character_from_json: kind mismatch");
    PeriodicCharacter c(coset_transversal(rs, j.at("level").get<std::int64_t>()));
    for (const auto& e : j.at("entries")) {
        const Weight rep = weight_from_json(e.at("rep"));
        c.at(c.transversal().index_of(rep)) = e.at("mult").get<std::int64_t>();
    }
    return c;
}

nlohmann::json fold_outcome_to_json(const FoldOutcome& f)
{
    if (!f.is_interior()) return {{"kind", "boundary"}};
    return {{"kind", "interior"}, {"sign", f.sign}, {"weight", weight_to_json(f.weight)}};
}

nlohmann::json fusion_element_to_json(const FusionElement& e)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [w, c] : e.coeffs())
        coeffs.push_back({{"weight", weight_to_json(w)}, {"coeff", c}});
    return {{"k", e.k()}, {"coeffs", coeffs}};
}

} // namespace fht
