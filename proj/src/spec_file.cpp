#include "cellfrob/spec_file.hpp"

#include <algorithm>
#include <cstdint>

#include <json.hpp>

#include "cellfrob/fixtures.hpp"

namespace cellfrob {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxDim = 64; // desk-scale tool; larger inputs are a mistake
constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

std::size_t to_index(const Json& j, const std::string& what, std::size_t dim) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(what + ": index must be a non-negative integer");
    auto v = j.get<unsigned long long>();
    if (v >= dim) fail(what + ": index " + std::to_string(v) + " out of range [0," +
                       std::to_string(dim) + ")");
    return static_cast<std::size_t>(v);
}

template <FieldScalar K>
K parse_coeff(const Json& j, const std::string& what, const K& exemplar);

template <>
Rational parse_coeff(const Json& j, const std::string& what, const Rational&) {
    if (!j.is_string()) fail(what + ": coefficients must be strings");
    auto v = Rational::parse(j.get<std::string>());
    if (!v) fail(what + ": cannot parse rational '" + j.get<std::string>() + "'");
    return *v;
}

template <>
Fp parse_coeff(const Json& j, const std::string& what, const Fp& exemplar) {
    if (!j.is_string()) fail(what + ": coefficients must be strings");
    auto v = Fp::parse(exemplar.modulus(), j.get<std::string>());
    if (!v) fail(what + ": cannot parse prime-field residue '" + j.get<std::string>() + "'");
    return *v;
}

template <FieldScalar K>
ParsedInputT<K> parse_typed(const Json& doc, const K& zero) {
    ParsedInputT<K> out;
    AlgebraSpec<K>& alg = out.alg;
    alg.set_field_zero(zero);

    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) fail("'dim' must be a positive integer");
    std::size_t dim = doc["dim"].get<std::size_t>();
    if (dim == 0 || dim > kMaxDim)
        fail("'dim' must lie in [1," + std::to_string(kMaxDim) + "]");
    alg.dim = dim;

    const Json& basis = doc.value("basis", Json::array());
    if (basis.size() != dim) fail("'basis' must list exactly dim labels");
    for (const auto& b : basis) {
        if (!b.is_string() || b.get<std::string>().empty()) fail("basis labels must be non-empty strings");
        alg.basis_labels.push_back(b.get<std::string>());
    }

    alg.table.assign(dim * dim, {});
    for (const Json& q : doc.value("structure_constants", Json::array())) {
        if (!q.is_array() || q.size() != 4) fail("structure constant entries are [i,j,k,coeff]");
        std::string what = "structure constant " + q.dump();
        std::size_t i = to_index(q[0], what, dim);
        std::size_t j = to_index(q[1], what, dim);
        std::size_t k = to_index(q[2], what, dim);
        K c = parse_coeff<K>(q[3], what, zero);
        if (c.is_zero()) continue;
        auto& entry = alg.table[i * dim + j];
        bool merged = false;
        for (auto& [m, v] : entry)
            if (m == k) {
                v += c;
                merged = true;
            }
        if (!merged) entry.push_back({k, c});
    }
    for (auto& entry : alg.table) {
        std::erase_if(entry, [](const auto& p) { return p.second.is_zero(); });
        std::sort(entry.begin(), entry.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    const Json& unit = doc.value("unit", Json::array());
    if (unit.size() != dim) fail("'unit' must have dim coordinates");
    for (std::size_t i = 0; i < dim; ++i)
        alg.unit.push_back(parse_coeff<K>(unit[i], "unit coordinate " + std::to_string(i), zero));

    alg.involution = Matrix<K>(dim, dim, zero);
    for (const Json& t : doc.value("involution", Json::array())) {
        if (!t.is_array() || t.size() != 3) fail("involution entries are [row,col,coeff]");
        std::string what = "involution entry " + t.dump();
        std::size_t r = to_index(t[0], what, dim);
        std::size_t c = to_index(t[1], what, dim);
        alg.involution.at(r, c) += parse_coeff<K>(t[2], what, zero);
    }

    const Json& trace = doc.value("trace", Json::array());
    if (trace.size() != dim) fail("'trace' must have dim coordinates");
    for (std::size_t i = 0; i < dim; ++i)
        alg.trace.push_back(parse_coeff<K>(trace[i], "trace coordinate " + std::to_string(i), zero));

    CellDatum& cd = out.cd;
    const Json& cells = doc.value("cells", Json::array());
    if (cells.empty()) fail("'cells' must list at least one cell");
    for (const Json& c : cells) {
        if (!c.is_object() || !c.contains("label") || !c.contains("members"))
            fail("cells are objects with 'label' and 'members'");
        std::string label = c["label"].get<std::string>();
        if (cd.find_cell(label)) fail("duplicate cell label '" + label + "'");
        cd.cell_labels.push_back(label);
        std::vector<std::string> members;
        for (const Json& m : c["members"]) {
            std::string ms = m.get<std::string>();
            if (std::find(members.begin(), members.end(), ms) != members.end())
                fail("duplicate member '" + ms + "' in cell '" + label + "'");
            members.push_back(ms);
        }
        if (members.empty()) fail("cell '" + label + "' has no members");
        cd.members.push_back(std::move(members));
    }

    std::set<std::pair<std::size_t, std::size_t>> rel;
    for (const Json& p : doc.value("poset", Json::array())) {
        if (!p.is_array() || p.size() != 2) fail("poset entries are [lower,higher] cell labels");
        auto lo = cd.find_cell(p[0].get<std::string>());
        auto hi = cd.find_cell(p[1].get<std::string>());
        if (!lo || !hi) fail("poset entry " + p.dump() + " references an unknown cell");
        rel.insert({*lo, *hi});
    }
    cd.less = transitive_closure(rel, cd.cell_count());

    cd.index_grid.resize(cd.cell_count());
    for (std::size_t c = 0; c < cd.cell_count(); ++c)
        cd.index_grid[c].assign(cd.cell_size(c) * cd.cell_size(c), dim); // dim marks "unset"
    for (const Json& e : doc.value("index_map", Json::array())) {
        if (!e.is_array() || e.size() != 4) fail("index map entries are [cell,S,T,basis_index]");
        std::string what = "index map entry " + e.dump();
        auto c = cd.find_cell(e[0].get<std::string>());
        if (!c) fail(what + ": unknown cell");
        const auto& mem = cd.members[*c];
        auto s = std::find(mem.begin(), mem.end(), e[1].get<std::string>());
        auto t = std::find(mem.begin(), mem.end(), e[2].get<std::string>());
        if (s == mem.end() || t == mem.end()) fail(what + ": unknown member");
        std::size_t b = to_index(e[3], what, dim);
        std::size_t slot = static_cast<std::size_t>(s - mem.begin()) * mem.size() +
                           static_cast<std::size_t>(t - mem.begin());
        if (cd.index_grid[*c][slot] != dim) fail(what + ": cell triple mapped twice");
        cd.index_grid[*c][slot] = b;
    }
    for (std::size_t c = 0; c < cd.cell_count(); ++c)
        for (std::size_t slot = 0; slot < cd.index_grid[c].size(); ++slot)
            if (cd.index_grid[c][slot] == dim)
                fail("index map misses a triple in cell '" + cd.cell_labels[c] + "'");
    cd.finalize(dim); // bijectivity and the (C1) count

    return out;
}

template <FieldScalar K>
Json serialize_typed(const AlgebraSpec<K>& alg, const CellDatum& cd, Json field) {
    Json doc;
    doc["field"] = std::move(field);
    doc["dim"] = alg.dim;
    doc["basis"] = alg.basis_labels;
    Json sc = Json::array();
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (const auto& [k, c] : alg.product_of_basis(i, j))
                sc.push_back(Json::array({i, j, k, c.str()}));
    doc["structure_constants"] = std::move(sc);
    Json unit = Json::array();
    for (const K& u : alg.unit) unit.push_back(u.str());
    doc["unit"] = std::move(unit);
    Json inv = Json::array();
    for (std::size_t r = 0; r < alg.dim; ++r)
        for (std::size_t c = 0; c < alg.dim; ++c)
            if (!alg.involution.at(r, c).is_zero())
                inv.push_back(Json::array({r, c, alg.involution.at(r, c).str()}));
    doc["involution"] = std::move(inv);
    Json trace = Json::array();
    for (const K& t : alg.trace) trace.push_back(t.str());
    doc["trace"] = std::move(trace);
    Json cells = Json::array();
    for (std::size_t c = 0; c < cd.cell_count(); ++c)
        cells.push_back(Json{{"label", cd.cell_labels[c]}, {"members", cd.members[c]}});
    doc["cells"] = std::move(cells);
    Json poset = Json::array();
    for (const auto& [a, b] : cd.less)
        poset.push_back(Json::array({cd.cell_labels[a], cd.cell_labels[b]}));
    doc["poset"] = std::move(poset);
    Json imap = Json::array();
    for (std::size_t c = 0; c < cd.cell_count(); ++c) {
        std::size_t n = cd.cell_size(c);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t)
                imap.push_back(Json::array(
                    {cd.cell_labels[c], cd.members[c][s], cd.members[c][t], cd.index_of(c, s, t)}));
    }
    doc["index_map"] = std::move(imap);
    return doc;
}

std::uint64_t parse_prime(const std::string& s) {
    if (s.empty()) fail("field: empty prime");
    std::uint64_t p = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("field: '" + s + "' is not a prime");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
        if (p > kMaxPrime) fail("field: prime moduli are limited to " + std::to_string(kMaxPrime));
    }
    if (!is_prime(p)) fail("field: " + s + " is not prime");
    return p;
}

} // namespace

ParsedInput parse_spec(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("field") || !doc["field"].is_object() ||
        !doc["field"].contains("type"))
        fail("spec must carry a 'field' object with a 'type'");
    try {
        std::string type = doc["field"]["type"].get<std::string>();
        if (type == "rational") return parse_typed<Rational>(doc, Rational());
        if (type == "prime") {
            if (!doc["field"].contains("p")) fail("prime field needs 'p'");
            const Json& pj = doc["field"]["p"];
            std::uint64_t p = pj.is_string() ? parse_prime(pj.get<std::string>())
                                             : parse_prime(std::to_string(pj.get<std::uint64_t>()));
            return parse_typed<Fp>(doc, Fp(p, 0));
        }
        fail("unknown field type '" + type + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed spec: ") + e.what());
    }
}

std::string serialize_spec(const ParsedInput& input) {
    return std::visit(
        [](const auto& in) {
            using K = std::decay_t<decltype(in.alg.zero())>;
            Json field;
            if constexpr (std::is_same_v<K, Rational>) {
                field = Json{{"type", "rational"}};
            } else {
                field = Json{{"type", "prime"}, {"p", in.alg.zero().modulus()}};
            }
            return serialize_typed(in.alg, in.cd, std::move(field)).dump(2) + "\n";
        },
        input);
}

std::string field_name(const ParsedInput& input) {
    return std::visit(
        [](const auto& in) -> std::string {
            using K = std::decay_t<decltype(in.alg.zero())>;
            if constexpr (std::is_same_v<K, Rational>)
                return "rational";
            else
                return "prime field F_" + std::to_string(in.alg.zero().modulus());
        },
        input);
}

ParsedInput builtin_fixture(const std::string& name,
                            const std::map<std::string, std::string>& params) {
    for (const auto& [k, v] : params)
        if (k != "field" && k != "lambda" && k != "n")
            fail("unknown builtin parameter '" + k + "'");
    std::string field = params.count("field") ? params.at("field") : "rational";

    auto make = [&](auto zero) -> ParsedInput {
        using K = decltype(zero);
        K one = zero.one();
        if (name == "koenig-xi") {
            std::string ls = params.count("lambda") ? params.at("lambda") : "2";
            K lam = parse_coeff<K>(Json(ls), "lambda", zero);
            auto fx = koenig_xi<K>(lam);
            return ParsedInputT<K>{std::move(fx.alg), std::move(fx.cd)};
        }
        if (name == "dual-numbers") {
            auto fx = dual_numbers<K>(one);
            return ParsedInputT<K>{std::move(fx.alg), std::move(fx.cd)};
        }
        if (name == "matrix") {
            std::size_t n = 2;
            if (params.count("n")) {
                try {
                    n = std::stoul(params.at("n"));
                } catch (...) {
                    fail("matrix: parameter n must be a positive integer");
                }
            }
            if (n == 0 || n * n > kMaxDim) fail("matrix: n out of range");
            auto fx = matrix_algebra<K>(n, one);
            return ParsedInputT<K>{std::move(fx.alg), std::move(fx.cd)};
        }
        fail("unknown builtin '" + name + "' (expected koenig-xi, dual-numbers or matrix)");
    };

    if (field == "rational") return make(Rational());
    return make(Fp(parse_prime(field), 0));
}

} // namespace cellfrob
