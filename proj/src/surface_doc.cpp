#include "ellsw/surface_doc.hpp"

#include "ellsw/errors.hpp"
#include "ellsw/rational_solve.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ellsw {

namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& field, const char* context) {
    auto it = obj.find(field);
    if (it == obj.end())
        throw schema_error(std::string(context) + ": missing field \"" + field + "\"");
    return *it;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const char* context) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw schema_error(std::string(context) + ": unknown field \"" + it.key() + "\"");
}

long long get_int(const json& v, const std::string& field) {
    if (!v.is_number_integer())
        throw schema_error(field + ": expected an integer");
    return v.get<long long>();
}

std::vector<bigint> get_int_vector(const json& v, const std::string& field, std::size_t len) {
    if (!v.is_array())
        throw schema_error(field + ": expected an array of integers");
    if (v.size() != len)
        throw schema_error(field + ": expected " + std::to_string(len) + " entries, got " +
                           std::to_string(v.size()));
    std::vector<bigint> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.emplace_back(get_int(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

int_matrix get_int_matrix(const json& v, const std::string& field, std::size_t cols) {
    if (!v.is_array())
        throw schema_error(field + ": expected an array of integer rows");
    int_matrix m(v.size(), cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto row = get_int_vector(v[i], field + "[" + std::to_string(i) + "]", cols);
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = row[j];
    }
    return m;
}

int_matrix generator_coordinates(const abelian_group& g) {
    int_matrix coords(g.num_generators(), g.free_rank());
    for (std::size_t i = 0; i < g.num_generators(); ++i)
        for (std::size_t j = 0; j < g.free_rank(); ++j)
            coords.at(i, j) = g.generator(i).free_part()[j];
    return coords;
}

surface_model load_log_transform(const json& doc) {
    reject_unknown(doc, {"kind", "name", "zetas"}, "surface document");
    const json& zetas = require(doc, "zetas", "surface document");
    if (!zetas.is_array())
        throw schema_error("zetas: expected an array of {m, u, v} objects");
    log_transform_input input;
    if (doc.contains("name"))
        input.name = doc["name"].get<std::string>();
    for (std::size_t i = 0; i < zetas.size(); ++i) {
        const std::string ctx = "zetas[" + std::to_string(i) + "]";
        if (!zetas[i].is_object())
            throw schema_error(ctx + ": expected an object {m, u, v}");
        reject_unknown(zetas[i], {"m", "u", "v"}, ctx.c_str());
        input.zetas.push_back({bigint(get_int(require(zetas[i], "m", ctx.c_str()), ctx + ".m")),
                               bigint(get_int(require(zetas[i], "u", ctx.c_str()), ctx + ".u")),
                               bigint(get_int(require(zetas[i], "v", ctx.c_str()), ctx + ".v"))});
    }
    return build_log_transform(input);
}

surface_model load_explicit(const json& doc) {
    reject_unknown(doc,
                   {"kind", "name", "generators", "relations", "intersection_form", "canonical",
                    "hodge", "fibration", "albanese_degrees"},
                   "surface document");

    const json& gens = require(doc, "generators", "surface document");
    if (!gens.is_array() || gens.empty())
        throw schema_error("generators: expected a nonempty array of names");
    std::vector<std::string> names;
    for (const auto& g : gens) {
        if (!g.is_string())
            throw schema_error("generators: expected strings");
        names.push_back(g.get<std::string>());
    }
    const std::size_t n = names.size();
    if (std::set<std::string>(names.begin(), names.end()).size() != n)
        throw schema_error("generators: names must be distinct");

    const int_matrix relations =
        get_int_matrix(require(doc, "relations", "surface document"), "relations", n);
    group_ptr h2 = present_group(n, relations);
    const int_matrix coords = generator_coordinates(*h2);

    const int_matrix pairing =
        get_int_matrix(require(doc, "intersection_form", "surface document"), "intersection_form", n);
    if (pairing.rows() != n)
        throw schema_error("intersection_form: expected " + std::to_string(n) + " rows");
    if (!pairing.is_symmetric())
        throw schema_error("intersection_form: matrix is not symmetric");
    auto form = descend_symmetric_form(coords, pairing);
    if (!form)
        throw schema_error("intersection_form: does not descend to the free quotient "
                           "(it must vanish on the relations and be integral)");

    const group_element canonical =
        h2->element(get_int_vector(require(doc, "canonical", "surface document"), "canonical", n));

    const json& hj = require(doc, "hodge", "surface document");
    reject_unknown(hj, {"q", "p_g", "chi_O", "c2"}, "hodge");
    hodge_data hodge;
    hodge.q = static_cast<int>(get_int(require(hj, "q", "hodge"), "hodge.q"));
    hodge.p_g = static_cast<int>(get_int(require(hj, "p_g", "hodge"), "hodge.p_g"));
    hodge.chi_O = static_cast<int>(get_int(require(hj, "chi_O", "hodge"), "hodge.chi_O"));
    hodge.c2 = static_cast<int>(get_int(require(hj, "c2", "hodge"), "hodge.c2"));

    std::optional<fibration_data> fibration;
    if (doc.contains("fibration")) {
        const json& fj = doc["fibration"];
        reject_unknown(fj, {"base_genus", "fiber", "multiple_fibers"}, "fibration");
        fibration_data f{
            static_cast<int>(get_int(require(fj, "base_genus", "fibration"), "fibration.base_genus")),
            h2->element(get_int_vector(require(fj, "fiber", "fibration"), "fibration.fiber", n)),
            {}};
        if (fj.contains("multiple_fibers")) {
            const json& mf = fj["multiple_fibers"];
            if (!mf.is_array())
                throw schema_error("fibration.multiple_fibers: expected an array");
            for (std::size_t i = 0; i < mf.size(); ++i) {
                const std::string ctx = "fibration.multiple_fibers[" + std::to_string(i) + "]";
                reject_unknown(mf[i], {"m", "class"}, ctx.c_str());
                const bigint m = get_int(require(mf[i], "m", ctx.c_str()), ctx + ".m");
                if (m < 2)
                    throw schema_error(ctx + ".m: multiplicity must be >= 2");
                f.multiple_fibers.emplace_back(
                    m, h2->element(get_int_vector(require(mf[i], "class", ctx.c_str()),
                                                  ctx + ".class", n)));
            }
        }
        fibration = std::move(f);
    }

    std::optional<std::vector<bigint>> alb_form;
    if (hodge.q == 1) {
        if (!doc.contains("albanese_degrees"))
            throw schema_error("albanese_degrees: required when q = 1");
        auto degrees = get_int_vector(doc["albanese_degrees"], "albanese_degrees", n);
        alb_form = descend_linear_form(coords, degrees);
        if (!alb_form)
            throw schema_error("albanese_degrees: form does not descend to the free quotient "
                               "(it must vanish on the relations and be integral)");
    } else if (doc.contains("albanese_degrees")) {
        throw schema_error("albanese_degrees: only meaningful when q = 1");
    }

    std::string name = doc.contains("name") ? doc["name"].get<std::string>() : "explicit surface";
    return surface_model(std::move(name), h2, std::move(names), n, std::move(*form), canonical,
                         hodge, std::move(fibration), std::move(alb_form));
}

} // namespace

surface_model load_surface_document(const json& doc) {
    if (!doc.is_object())
        throw schema_error("surface document: expected a JSON object");
    const json& kind = require(doc, "kind", "surface document");
    if (kind == "log_transform")
        return load_log_transform(doc);
    if (kind == "explicit")
        return load_explicit(doc);
    throw schema_error("kind: expected \"log_transform\" or \"explicit\"");
}

surface_model load_surface_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw schema_error(std::string("surface document: invalid JSON: ") + e.what());
    }
    return load_surface_document(doc);
}

surface_model load_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw schema_error("cannot open surface document \"" + path + "\"");
    std::ostringstream text;
    text << in.rdbuf();
    return load_surface_json(text.str());
}

std::string surface_summary_text(const surface_model& s) {
    std::ostringstream os;
    os << "surface: " << s.name() << "\n";
    os << "hodge: q=" << s.hodge().q << " p_g=" << s.hodge().p_g << " chi_O=" << s.hodge().chi_O
       << " c2=" << s.hodge().c2 << "\n";
    os << "H^2 = " << s.h2()->structure_string() << "\n";
    os << "generators (free part; torsion residues):\n";
    for (std::size_t i = 0; i < s.h2()->num_generators(); ++i)
        os << "  " << s.generator_names()[i] << " = " << s.h2()->generator(i).to_string() << "\n";
    os << "canonical class: " << s.canonical().to_string() << "\n";
    os << "intersection form (free quotient): " << s.intersection_form().to_string() << "\n";
    if (s.fibration()) {
        os << "fibration: base genus " << s.fibration()->base_genus << ", fiber "
           << s.fibration()->fiber.to_string();
        if (!s.fibration()->multiple_fibers.empty()) {
            os << ", multiple fibers:";
            for (const auto& [m, f] : s.fibration()->multiple_fibers)
                os << " " << m.str() << "*" << f.to_string();
        }
        os << "\n";
    }
    if (s.has_albanese_form()) {
        os << "albanese degrees:";
        for (std::size_t i = 0; i < s.h2()->num_generators(); ++i)
            os << " " << s.generator_names()[i] << "="
               << s.albanese_degree(s.h2()->generator(i)).str();
        os << "\n";
    }
    return os.str();
}

json surface_summary_json(const surface_model& s) {
    json j;
    j["name"] = s.name();
    j["hodge"] = {{"q", s.hodge().q},
                  {"p_g", s.hodge().p_g},
                  {"chi_O", s.hodge().chi_O},
                  {"c2", s.hodge().c2}};
    j["h2"] = s.h2()->structure_string();
    j["free_rank"] = s.h2()->free_rank();
    json torsion = json::array();
    for (const bigint& d : s.h2()->torsion_orders())
        torsion.push_back(d.str());
    j["torsion_orders"] = torsion;
    json gens = json::array();
    for (std::size_t i = 0; i < s.h2()->num_generators(); ++i) {
        json g;
        g["name"] = s.generator_names()[i];
        g["coords"] = s.h2()->generator(i).to_string();
        if (s.has_albanese_form())
            g["albanese_degree"] = s.albanese_degree(s.h2()->generator(i)).str();
        gens.push_back(g);
    }
    j["generators"] = gens;
    j["canonical"] = s.canonical().to_string();
    j["intersection_form"] = s.intersection_form().to_string();
    if (s.fibration()) {
        json f;
        f["base_genus"] = s.fibration()->base_genus;
        f["fiber"] = s.fibration()->fiber.to_string();
        json mf = json::array();
        for (const auto& [m, cls] : s.fibration()->multiple_fibers)
            mf.push_back({{"m", m.str()}, {"class", cls.to_string()}});
        f["multiple_fibers"] = mf;
        j["fibration"] = f;
    }
    return j;
}

} // namespace ellsw
