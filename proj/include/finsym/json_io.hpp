#pragma once

// JSON schemas:
//   abelian group    {"invariant_factors":[2,4]}
//   finite group     {"order":n,"cayley":[[...]],"identity":i}
//   quadratic form   {"group":{...},"gen_values":["1/4",...],"cross_terms":["1/2",...]}
//                    (cross terms b(g_i,g_j) for i<j in row-major order)
//   chain complex    {"cells":[c0,c1,...],"boundaries":[d1,d2,...]}, d_k a c_{k-1} x c_k
//                    array of rows
//   fusion ring      {"labels":[...],"unit":0,"N":[[[...]]],"dual":[...]}

#include <json.hpp>

#include <string>
#include <vector>

#include "finsym/abelian_group.hpp"
#include "finsym/chain_complex.hpp"
#include "finsym/error.hpp"
#include "finsym/finite_group.hpp"
#include "finsym/fusion.hpp"
#include "finsym/quadratic_form.hpp"

namespace finsym::json_io {

using Json = nlohmann::ordered_json;

namespace detail {

template <typename F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed " + what + " JSON: " + e.what());
    }
}

}  // namespace detail

inline Json to_json(const FiniteAbelianGroup& a) { return Json{{"invariant_factors", a.invariant_factors()}}; }

inline FiniteAbelianGroup abelian_group_from_json(const Json& j) {
    return detail::guarded("abelian group", [&] {
        return FiniteAbelianGroup(j.at("invariant_factors").get<std::vector<std::int64_t>>());
    });
}

inline Json to_json(const FiniteGroup& g) {
    return Json{{"order", g.order()}, {"cayley", g.cayley()}, {"identity", g.identity()}};
}

inline FiniteGroup finite_group_from_json(const Json& j, const std::string& name = "") {
    return detail::guarded("finite group", [&] {
        const auto order = j.at("order").get<std::size_t>();
        auto table = j.at("cayley").get<std::vector<std::vector<std::size_t>>>();
        if (table.size() != order) {
            throw InputError("Cayley table size does not match order");
        }
        return FiniteGroup(std::move(table), j.at("identity").get<std::size_t>(), name);
    });
}

inline Json to_json(const QuadraticForm& q) {
    Json gens = Json::array();
    for (const auto& p : q.gen_values()) {
        gens.push_back(p.str());
    }
    Json cross = Json::array();
    for (const auto& p : q.cross_terms()) {
        cross.push_back(p.str());
    }
    return Json{{"group", to_json(q.domain())}, {"gen_values", gens}, {"cross_terms", cross}};
}

inline QuadraticForm quadratic_form_from_json(const Json& j) {
    return detail::guarded("quadratic form", [&] {
        std::vector<Phase> gens;
        for (const auto& s : j.at("gen_values")) {
            gens.push_back(Phase::parse(s.get<std::string>()));
        }
        std::vector<Phase> cross;
        if (j.contains("cross_terms")) {
            for (const auto& s : j.at("cross_terms")) {
                cross.push_back(Phase::parse(s.get<std::string>()));
            }
        }
        return QuadraticForm(abelian_group_from_json(j.at("group")), std::move(gens), std::move(cross));
    });
}

inline Json to_json(const ChainComplex& c) {
    Json bnd = Json::array();
    for (std::size_t k = 1; k <= c.top_dim(); ++k) {
        const IntMatrix d = c.boundary(k);
        Json rows = Json::array();
        for (std::size_t i = 0; i < d.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t jx = 0; jx < d.cols(); ++jx) {
                row.push_back(d(i, jx).convert_to<long long>());
            }
            rows.push_back(std::move(row));
        }
        bnd.push_back(std::move(rows));
    }
    return Json{{"cells", c.cells_per_dim()}, {"boundaries", bnd}};
}

inline ChainComplex chain_complex_from_json(const Json& j) {
    return detail::guarded("chain complex", [&] {
        const auto cells = j.at("cells").get<std::vector<std::size_t>>();
        std::vector<IntMatrix> bnd;
        const auto& arr = j.at("boundaries");
        if (cells.empty() || arr.size() + 1 != cells.size()) {
            throw InputError("chain complex JSON needs len(boundaries) = len(cells) - 1");
        }
        for (std::size_t k = 1; k < cells.size(); ++k) {
            const auto rows = arr.at(k - 1).get<std::vector<std::vector<long long>>>();
            if (rows.size() != cells[k - 1]) {
                throw InputError("boundary d_" + std::to_string(k) + " has wrong number of rows");
            }
            bnd.push_back(IntMatrix::from_rows(rows, cells[k]));
        }
        return ChainComplex(cells, std::move(bnd));
    });
}

inline Json to_json(const FusionRing& r) {
    return Json{{"labels", r.labels()}, {"unit", r.unit()}, {"N", r.tensor()}, {"dual", r.dual()}};
}

inline FusionRing fusion_ring_from_json(const Json& j) {
    return detail::guarded("fusion ring", [&] {
        return FusionRing(j.at("labels").get<std::vector<std::string>>(), j.at("unit").get<std::size_t>(),
                          j.at("N").get<FusionRing::Tensor>(), j.at("dual").get<std::vector<std::size_t>>());
    });
}

}  // namespace finsym::json_io
