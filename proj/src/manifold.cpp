#include "confhom/manifold.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace confhom {

using nlohmann::json;
using nlohmann::ordered_json;

void CupTable::set(Key key, Value value) {
    std::erase_if(value, [](const auto& e) { return e.second == 0; });
    if (value.empty()) {
        entries_.erase(key);
        return;
    }
    std::sort(value.begin(), value.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    entries_[key] = std::move(value);
}

CupTable::Value CupTable::lookup(int p, int a, int q, int b) const {
    auto it = entries_.find(Key{p, a, q, b});
    if (it != entries_.end()) return it->second;
    it = entries_.find(Key{q, b, p, a});
    if (it == entries_.end()) return {};
    Value out = it->second;
    if ((p * q) & 1) {
        for (auto& [idx, coeff] : out) coeff = -coeff;
    }
    return out;
}

int ManifoldData::hc_rank(int p) const {
    auto it = hc_untwisted.find(p);
    return it == hc_untwisted.end() ? 0 : it->second;
}

int ManifoldData::hc_twisted_rank(int p) const {
    auto it = hc_twisted.find(p);
    return it == hc_twisted.end() ? 0 : it->second;
}

namespace {

int parse_degree_key(const std::string& key, const std::string& field) {
    if (key.empty() ||
        !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw manifold_error(field + ": degree key '" + key + "' is not a non-negative integer");
    }
    return std::stoi(key);
}

std::map<int, int> parse_rank_map(const json& obj, const std::string& field) {
    if (!obj.is_object()) throw manifold_error(field + ": expected an object of degree -> rank");
    std::map<int, int> out;
    for (const auto& [key, value] : obj.items()) {
        const int degree = parse_degree_key(key, field);
        if (!value.is_number_integer()) {
            throw manifold_error(field + ": rank at degree " + key + " is not an integer");
        }
        const int rank = value.get<int>();
        if (rank < 0) throw manifold_error(field + ": negative rank at degree " + key);
        if (rank > 0) out[degree] = rank;
    }
    return out;
}

Rational parse_rational_field(const json& value, const std::string& field) {
    try {
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_integer()) return Rational(value.get<long long>());
    } catch (const std::invalid_argument& e) {
        throw manifold_error(field + ": " + e.what());
    }
    throw manifold_error(field + ": expected a \"num/den\" string");
}

void require_fields(const json& obj, const std::set<std::string>& allowed,
                    const std::set<std::string>& required, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) throw manifold_error(where + ": unknown field '" + key + "'");
    }
    for (const auto& key : required) {
        if (!obj.contains(key)) throw manifold_error(where + ": missing field '" + key + "'");
    }
}

std::string cup_key_name(const CupTable::Key& k) {
    std::ostringstream os;
    os << "cup(p=" << k.p << ",a=" << k.a << ",q=" << k.q << ",b=" << k.b << ")";
    return os.str();
}

}  // namespace

ManifoldData load_manifold(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw manifold_error(std::string("parse error: ") + e.what());
    }
    if (!doc.is_object()) throw manifold_error("document: expected a JSON object");
    require_fields(doc,
                   {"name", "dim", "open", "orientable", "hc", "hc_twisted", "betti", "cup"},
                   {"name", "dim", "open", "orientable", "hc"}, "document");

    ManifoldData m;
    if (!doc["name"].is_string()) throw manifold_error("name: expected a string");
    m.name = doc["name"].get<std::string>();
    if (!doc["dim"].is_number_integer()) throw manifold_error("dim: expected an integer");
    m.dim = doc["dim"].get<int>();
    if (!doc["open"].is_boolean()) throw manifold_error("open: expected a boolean");
    m.open = doc["open"].get<bool>();
    if (!doc["orientable"].is_boolean()) throw manifold_error("orientable: expected a boolean");
    m.orientable = doc["orientable"].get<bool>();

    m.hc_untwisted = parse_rank_map(doc["hc"], "hc");
    if (doc.contains("hc_twisted")) {
        m.hc_twisted = parse_rank_map(doc["hc_twisted"], "hc_twisted");
    } else if (m.orientable) {
        m.hc_twisted = m.hc_untwisted;
    } else {
        throw manifold_error("hc_twisted: required for non-orientable manifolds");
    }
    if (doc.contains("betti")) m.ordinary_betti = parse_rank_map(doc["betti"], "betti");

    if (doc.contains("cup")) {
        if (!doc["cup"].is_array()) throw manifold_error("cup: expected an array");
        for (const auto& entry : doc["cup"]) {
            if (!entry.is_object()) throw manifold_error("cup: entry is not an object");
            require_fields(entry, {"p", "a", "q", "b", "value"}, {"p", "a", "q", "b", "value"},
                           "cup entry");
            CupTable::Key key;
            const std::pair<const char*, int*> key_fields[] = {
                {"p", &key.p}, {"a", &key.a}, {"q", &key.q}, {"b", &key.b}};
            for (auto [field, slot] : key_fields) {
                if (!entry[field].is_number_integer() || entry[field].get<int>() < 0) {
                    throw manifold_error(std::string("cup entry: field '") + field +
                                         "' must be a non-negative integer");
                }
                *slot = entry[field].get<int>();
            }
            if (m.cup.entries().count(key)) {
                throw manifold_error("duplicate " + cup_key_name(key));
            }
            if (!entry["value"].is_array()) {
                throw manifold_error(cup_key_name(key) + ": value must be an array");
            }
            CupTable::Value value;
            for (const auto& term : entry["value"]) {
                if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
                    term[0].get<int>() < 0) {
                    throw manifold_error(cup_key_name(key) +
                                         ": value terms must be [index, \"num/den\"] pairs");
                }
                value.emplace_back(term[0].get<int>(),
                                   parse_rational_field(term[1], cup_key_name(key)));
            }
            std::set<int> seen;
            for (const auto& [idx, coeff] : value) {
                if (!seen.insert(idx).second) {
                    throw manifold_error(cup_key_name(key) + ": duplicate target index");
                }
            }
            m.cup.set(key, std::move(value));
        }
    }

    const auto violations = validate_manifold(m);
    if (!violations.empty()) {
        std::string message = "invalid manifold '" + m.name + "':";
        for (const auto& v : violations) message += "\n  " + v;
        throw manifold_error(message);
    }
    return m;
}

std::vector<std::string> validate_manifold(const ManifoldData& m) {
    std::vector<std::string> out;
    if (m.dim < 1) out.push_back("dim: must be >= 1");

    auto check_ranks = [&](const std::map<int, int>& ranks, const std::string& field) {
        for (const auto& [degree, rank] : ranks) {
            if (rank < 0) out.push_back(field + ": negative rank at degree " + std::to_string(degree));
            if (rank > 0 && (degree < 0 || degree > m.dim)) {
                out.push_back(field + ": rank outside 0..d at degree " + std::to_string(degree));
            }
        }
    };
    check_ranks(m.hc_untwisted, "hc");
    check_ranks(m.hc_twisted, "hc_twisted");
    if (m.ordinary_betti) check_ranks(*m.ordinary_betti, "betti");

    if (m.open) {
        if (m.hc_rank(0) != 0) out.push_back("hc: open connected manifold requires rank 0 at degree 0");
        if (m.orientable && m.hc_twisted_rank(m.dim) != 1) {
            out.push_back("hc_twisted: open orientable connected manifold requires rank 1 at top degree");
        }
    } else if (m.orientable) {
        if (m.hc_rank(0) != 1) out.push_back("hc: closed connected manifold requires rank 1 at degree 0");
        if (m.hc_rank(m.dim) != 1) out.push_back("hc: closed orientable manifold requires rank 1 at top degree");
    }
    if (m.orientable && m.hc_twisted != m.hc_untwisted) {
        out.push_back("hc_twisted: must equal hc for orientable manifolds");
    }

    for (const auto& [key, value] : m.cup.entries()) {
        const std::string name = cup_key_name(key);
        if (key.p + key.q > m.dim) {
            out.push_back(name + ": degree additivity, product lands above top degree");
        }
        if (key.a >= m.hc_twisted_rank(key.p)) {
            out.push_back(name + ": index a out of range for hc_twisted");
        }
        if (key.b >= m.hc_twisted_rank(key.q)) {
            out.push_back(name + ": index b out of range for hc_twisted");
        }
        for (const auto& [idx, coeff] : value) {
            if (idx >= m.hc_rank(key.p + key.q)) {
                out.push_back(name + ": target index out of range for hc at degree " +
                              std::to_string(key.p + key.q));
                break;
            }
        }
        // Graded commutativity for stored pairs; the diagonal with odd degree
        // must vanish outright.
        const auto mirror = m.cup.entries().find(CupTable::Key{key.q, key.b, key.p, key.a});
        if (key.p == key.q && key.a == key.b && (key.p & 1) != 0) {
            out.push_back(name + ": graded commutativity forces an odd-degree square to vanish");
        } else if (mirror != m.cup.entries().end()) {
            CupTable::Value expected = mirror->second;
            if ((key.p * key.q) & 1) {
                for (auto& [idx, coeff] : expected) coeff = -coeff;
            }
            if (expected != value) {
                out.push_back(name + ": graded commutativity violated against the mirrored entry");
            }
        }
    }
    return out;
}

std::string serialize_manifold(const ManifoldData& m) {
    ordered_json doc;
    doc["name"] = m.name;
    doc["dim"] = m.dim;
    doc["open"] = m.open;
    doc["orientable"] = m.orientable;
    auto rank_map = [](const std::map<int, int>& ranks) {
        ordered_json obj = ordered_json::object();
        for (const auto& [degree, rank] : ranks) obj[std::to_string(degree)] = rank;
        return obj;
    };
    doc["hc"] = rank_map(m.hc_untwisted);
    if (!m.orientable) doc["hc_twisted"] = rank_map(m.hc_twisted);
    if (m.ordinary_betti) doc["betti"] = rank_map(*m.ordinary_betti);
    doc["cup"] = ordered_json::array();
    for (const auto& [key, value] : m.cup.entries()) {
        ordered_json entry;
        entry["p"] = key.p;
        entry["a"] = key.a;
        entry["q"] = key.q;
        entry["b"] = key.b;
        ordered_json terms = ordered_json::array();
        for (const auto& [idx, coeff] : value) {
            terms.push_back(ordered_json::array({idx, format_rational(coeff)}));
        }
        entry["value"] = std::move(terms);
        doc["cup"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

namespace {

std::string euclidean_fixture(int d) {
    ordered_json doc;
    doc["name"] = "R^" + std::to_string(d);
    doc["dim"] = d;
    doc["open"] = true;
    doc["orientable"] = true;
    doc["hc"] = {{std::to_string(d), 1}};
    doc["betti"] = {{"0", 1}};
    doc["cup"] = ordered_json::array();
    return doc.dump();
}

std::string sphere_fixture(int d) {
    // All products with the unit, nothing else: top*top lands above degree d.
    ordered_json doc;
    doc["name"] = "S^" + std::to_string(d);
    doc["dim"] = d;
    doc["open"] = false;
    doc["orientable"] = true;
    doc["hc"] = {{"0", 1}, {std::to_string(d), 1}};
    doc["betti"] = {{"0", 1}, {std::to_string(d), 1}};
    doc["cup"] = ordered_json::array(
        {{{"p", 0}, {"a", 0}, {"q", 0}, {"b", 0}, {"value", {{0, "1/1"}}}},
         {{"p", 0}, {"a", 0}, {"q", d}, {"b", 0}, {"value", {{0, "1/1"}}}},
         {{"p", d}, {"a", 0}, {"q", 0}, {"b", 0}, {"value", {{0, "1/1"}}}}});
    return doc.dump();
}

std::string cp2_fixture() {
    // Q[h]/h^3 with h in degree 2.
    ordered_json doc;
    doc["name"] = "CP^2";
    doc["dim"] = 4;
    doc["open"] = false;
    doc["orientable"] = true;
    doc["hc"] = {{"0", 1}, {"2", 1}, {"4", 1}};
    doc["betti"] = {{"0", 1}, {"2", 1}, {"4", 1}};
    doc["cup"] = ordered_json::array(
        {{{"p", 0}, {"a", 0}, {"q", 0}, {"b", 0}, {"value", {{0, "1/1"}}}},
         {{"p", 0}, {"a", 0}, {"q", 2}, {"b", 0}, {"value", {{0, "1/1"}}}},
         {{"p", 0}, {"a", 0}, {"q", 4}, {"b", 0}, {"value", {{0, "1/1"}}}},
         {{"p", 2}, {"a", 0}, {"q", 0}, {"b", 0}, {"value", {{0, "1/1"}}}},
         {{"p", 2}, {"a", 0}, {"q", 2}, {"b", 0}, {"value", {{0, "1/1"}}}},
         {{"p", 4}, {"a", 0}, {"q", 0}, {"b", 0}, {"value", {{0, "1/1"}}}}});
    return doc.dump();
}

std::string product_with_euclidean_fixture(const std::string& name, int d,
                                           std::map<int, int> hc, std::map<int, int> betti) {
    // X x R^m: every compactly supported product carries the square of the
    // R^m top class, so the cup table is identically zero.
    ordered_json doc;
    doc["name"] = name;
    doc["dim"] = d;
    doc["open"] = true;
    doc["orientable"] = true;
    ordered_json hc_obj = ordered_json::object();
    for (const auto& [p, r] : hc) hc_obj[std::to_string(p)] = r;
    doc["hc"] = std::move(hc_obj);
    ordered_json betti_obj = ordered_json::object();
    for (const auto& [i, r] : betti) betti_obj[std::to_string(i)] = r;
    doc["betti"] = std::move(betti_obj);
    doc["cup"] = ordered_json::array();
    return doc.dump();
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"R^2", "R^4", "R^6", "R^8", "S^2", "S^3", "S^4",
            "S^5",  "S^6", "S^7", "CP^2", "CP2xR2", "S2xR4"};
}

ManifoldData builtin_catalog(const std::string& name) {
    std::string doc;
    if (name == "R^2" || name == "R^4" || name == "R^6" || name == "R^8") {
        doc = euclidean_fixture(name[2] - '0');
    } else if (name.size() == 3 && name.rfind("S^", 0) == 0 && name[2] >= '2' && name[2] <= '7') {
        doc = sphere_fixture(name[2] - '0');
    } else if (name == "CP^2") {
        doc = cp2_fixture();
    } else if (name == "CP2xR2") {
        doc = product_with_euclidean_fixture("CP2xR2", 6, {{2, 1}, {4, 1}, {6, 1}},
                                             {{0, 1}, {2, 1}, {4, 1}});
    } else if (name == "S2xR4") {
        doc = product_with_euclidean_fixture("S2xR4", 6, {{4, 1}, {6, 1}}, {{0, 1}, {2, 1}});
    } else {
        throw manifold_error("unknown catalog manifold '" + name + "'");
    }
    return load_manifold(doc);
}

std::optional<bool> has_even_cohomology(const ManifoldData& m) {
    if (!m.orientable) return std::nullopt;
    // H^j(M;Q) ~ H_c^{d-j}(M;Q) for orientable M.
    for (int j = 1; j <= m.dim; j += 2) {
        if (m.hc_rank(m.dim - j) != 0) return false;
    }
    return true;
}

}  // namespace confhom
