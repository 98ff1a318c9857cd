#include "emblat/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace emblat {

using nlohmann::json;

json partition_to_json(const Partition& p) {
    json out = json::array();
    for (const auto& blk : p.blocks()) out.push_back(blk);
    return out;
}

Partition partition_from_json(const json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array of arrays");
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : j) {
        if (!blk.is_array()) throw std::invalid_argument("partition block must be an array");
        blocks.push_back(blk.get<std::vector<int>>());
    }
    return Partition::of(blocks, n);
}

json embedded_to_json(const EmbeddedSubset& x) {
    if (x.is_bottom()) return json{{"bottom", true}};
    return json{{"s", x.s()}, {"pi", partition_to_json(x.pi())}};
}

EmbeddedSubset embedded_from_json(const json& j, int n) {
    if (!j.is_object()) throw std::invalid_argument("embedded subset JSON must be an object");
    if (j.contains("bottom")) {
        if (j.at("bottom").get<bool>()) return EmbeddedSubset::bottom(n);
        throw std::invalid_argument("embedded subset: \"bottom\" must be true when present");
    }
    if (!j.contains("s") || !j.contains("pi"))
        throw std::invalid_argument("embedded subset JSON needs \"s\" and \"pi\"");
    Partition pi = partition_from_json(j.at("pi"), n);
    return EmbeddedSubset::of(j.at("s").get<std::vector<int>>(), std::move(pi));
}

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw std::invalid_argument("rational must be a string like \"2\" or \"7/25\"");
}

namespace {
json vector_to_json(int n, const EmbeddedLattice& L, const std::vector<Rational>& vals,
                    const char* key) {
    json entries = json::array();
    for (int i = 1; i < L.size(); ++i) {
        const EmbeddedSubset& e = L.element(i);
        json row{{"s", e.s()}, {"pi", partition_to_json(e.pi())}};
        row[key] = rational_to_json(vals[i]);
        entries.push_back(std::move(row));
    }
    return json{{"n", n}, {"values", entries}};
}

std::vector<Rational> vector_from_json(const json& j, const EmbeddedLattice& L, const char* key) {
    if (!j.is_object() || !j.contains("n") || !j.contains("values"))
        throw std::invalid_argument("expected {\"n\":..,\"values\":[..]}");
    const int n = j.at("n").get<int>();
    if (n != L.n())
        throw std::invalid_argument("JSON n=" + std::to_string(n) + " does not match lattice n=" +
                                    std::to_string(L.n()));
    std::vector<Rational> vals(L.size(), Rational(0));
    std::vector<char> seen(L.size(), 0);
    for (const auto& row : j.at("values")) {
        EmbeddedSubset e = embedded_from_json(row, n);
        const int idx = L.index_of(e);
        if (!row.contains(key))
            throw std::invalid_argument(std::string("entry for ") + e.str() + " lacks key \"" +
                                        key + "\"");
        if (idx == 0) {
            if (!rational_from_json(row.at(key)).is_zero())
                throw std::invalid_argument("bottom must carry value 0");
            continue;
        }
        if (seen[idx]) throw std::invalid_argument("duplicate entry for " + e.str());
        seen[idx] = 1;
        vals[idx] = rational_from_json(row.at(key));
    }
    return vals;
}
}  // namespace

json game_to_json(const Game& g) {
    return vector_to_json(g.lattice().n(), g.lattice(), g.values(), "v");
}

Game game_from_json(const json& j, LatticePtr lat) {
    std::vector<Rational> vals = vector_from_json(j, *lat, "v");
    return Game(std::move(lat), std::move(vals));
}

Game game_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n"))
        throw std::invalid_argument("game JSON needs an \"n\" field");
    return game_from_json(j, build_lattice_shared(j.at("n").get<int>()));
}

json moebius_to_json(const MoebiusVector& m) {
    return vector_to_json(m.lattice().n(), m.lattice(), m.masses(), "m");
}

MoebiusVector moebius_from_json(const json& j, LatticePtr lat) {
    std::vector<Rational> vals = vector_from_json(j, *lat, "m");
    return MoebiusVector(std::move(lat), std::move(vals));
}

MoebiusVector moebius_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n"))
        throw std::invalid_argument("Moebius vector JSON needs an \"n\" field");
    return moebius_from_json(j, build_lattice_shared(j.at("n").get<int>()));
}

json lattice_to_json(const EmbeddedLattice& L) {
    json elems = json::array();
    for (int i = 0; i < L.size(); ++i) {
        json e = embedded_to_json(L.element(i));
        e["index"] = i;
        e["height"] = L.height(i);
        elems.push_back(std::move(e));
    }
    json edges = json::array();
    for (int i = 0; i < L.size(); ++i)
        for (int j : L.upper_covers(i)) edges.push_back(json::array({i, j}));
    return json{{"n", L.n()}, {"elements", elems}, {"edges", edges}};
}

std::string lattice_to_dot(const EmbeddedLattice& L) {
    std::ostringstream out;
    out << "graph embedded_lattice_" << L.n() << " {\n";
    out << "  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int h = 0; h <= L.n(); ++h) {
        out << "  { rank=same;";
        for (int i = 0; i < L.size(); ++i)
            if (L.height(i) == h) out << " n" << i << ";";
        out << " }\n";
    }
    for (int i = 0; i < L.size(); ++i)
        out << "  n" << i << " [label=\"" << L.element(i).str() << "\"];\n";
    for (int i = 0; i < L.size(); ++i)
        for (int j : L.upper_covers(i)) out << "  n" << i << " -- n" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace emblat
