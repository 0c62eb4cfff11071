#include "modcat/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace modcat {

FiniteGroup group_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "table") {
            auto names = j.at("names").get<std::vector<std::string>>();
            auto table = j.at("table").get<std::vector<std::vector<int>>>();
            return FiniteGroup(std::move(table), std::move(names));
        }
        if (kind == "perms") {
            int degree = j.at("degree").get<int>();
            auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
            return FiniteGroup::from_permutations(degree, gens);
        }
        throw InvalidInput("unknown group spec kind: " + kind);
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed group spec: ") + e.what());
    }
}

Json group_to_json(const FiniteGroup& X) {
    Json j;
    j["kind"] = "table";
    j["names"] = X.names();
    j["table"] = X.table();
    return j;
}

FiniteGroup load_group_file(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("cannot parse group file: ") + e.what());
    }
    return group_from_json(j);
}

std::vector<int> parse_element_list(const FiniteGroup& X, const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(' ');
        size_t e = tok.find_last_not_of(' ');
        if (b == std::string::npos) continue;
        tok = tok.substr(b, e - b + 1);
        int idx = X.index_of(tok);
        if (idx < 0) throw InvalidInput("unknown element name: " + tok);
        out.push_back(idx);
    }
    if (out.empty()) throw InvalidInput("empty element list");
    return out;
}

std::vector<int> default_transversal(const FiniteGroup& X, const Subgroup& G) {
    std::vector<int> M;
    std::set<int> covered;
    for (int s = 0; s < X.order(); ++s) {
        if (covered.count(s)) continue;
        M.push_back(s);
        for (int v : G.elements) covered.insert(X.mul(s, v));
    }
    return M;
}

Json cyclotomic_to_json(const Cyclotomic& c) {
    Json j;
    j["n"] = c.conductor();
    Json coeffs = Json::array();
    for (const auto& q : c.coeffs()) {
        coeffs.push_back({q.get_num().get_str(), q.get_den().get_str()});
    }
    j["coeffs"] = coeffs;
    auto z = c.to_complex();
    j["approx"] = {z.real(), z.imag()};
    j["str"] = c.to_string();
    return j;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    try {
        int n = j.at("n").get<int>();
        Cyclotomic acc = Cyclotomic::zero(n);
        const auto& coeffs = j.at("coeffs");
        for (size_t k = 0; k < coeffs.size(); ++k) {
            Rational q(coeffs[k][0].get<std::string>() + "/" + coeffs[k][1].get<std::string>());
            q.canonicalize();
            acc += Cyclotomic(q, n) * Cyclotomic::root_of_unity(n, static_cast<long>(k));
        }
        return acc;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed cyclotomic: ") + e.what());
    }
}

Json class_function_to_json(const FiniteGroup& X, const ClassFunction& chi) {
    Json vals = Json::object();
    for (size_t i = 0; i < chi.elems.size(); ++i)
        vals[X.name(chi.elems[i])] = chi.vals[i].to_string();
    return vals;
}

Json matrix_to_json(const CycMatrix& m, const std::vector<std::string>& labels) {
    Json j;
    if (!labels.empty()) j["order"] = labels;
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(cyclotomic_to_json(v));
        rows.push_back(std::move(r));
    }
    j["entries"] = rows;
    return j;
}

namespace {
std::string conductor_header(int n) {
    std::string h = "# w = e^(2*pi*i/" + std::to_string(n) + ")";
    if (n == 6) h += " = e^(i*pi/3)";
    return h;
}
}  // namespace

std::string matrix_to_csv(const CycMatrix& m, const std::vector<std::string>& labels) {
    int n = m.empty() ? 1 : m[0][0].conductor();
    std::string out = conductor_header(n) + "\n";
    if (!labels.empty()) {
        out += "# order:";
        for (size_t i = 0; i < labels.size(); ++i) out += (i ? "," : " ") + labels[i];
        out += "\n";
    }
    for (const auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += ",";
            out += row[j].to_string();
        }
        out += "\n";
    }
    return out;
}

Json factorization_to_json(const CosetFactorization& f) {
    const FiniteGroup& X = f.group();
    Json j;
    Json g = Json::array(), m = Json::array();
    for (int u : f.subgroup().elements) g.push_back(X.name(u));
    for (int s : f.transversal()) m.push_back(X.name(s));
    j["G"] = g;
    j["M"] = m;
    auto name = [&](int e) { return X.name(e); };
    Json actg, actm, tau, dot, linv, fgm, fmg;
    for (int s : f.transversal()) {
        Json rg, rm;
        for (int u : f.subgroup().elements) {
            rg[name(u)] = name(f.act_G(s, u));
            rm[name(u)] = name(f.act_M(s, u));
        }
        actg[name(s)] = rg;
        actm[name(s)] = rm;
        Json rt, rd;
        for (int t : f.transversal()) {
            rt[name(t)] = name(f.tau(s, t));
            rd[name(t)] = name(f.dot(s, t));
        }
        tau[name(s)] = rt;
        dot[name(s)] = rd;
        linv[name(s)] = name(f.left_inv(s));
    }
    for (int x = 0; x < X.order(); ++x) {
        auto [u, s] = f.factor_GM(x);
        auto [sm, v] = f.factor_MG(x);
        fgm[name(x)] = {name(u), name(s)};
        fmg[name(x)] = {name(sm), name(v)};
    }
    j["act_G"] = actg;
    j["act_M"] = actm;
    j["tau"] = tau;
    j["dot"] = dot;
    j["left_inv"] = linv;
    j["factor_GM"] = fgm;
    j["factor_MG"] = fmg;
    return j;
}

Json chartable_to_json(const CharacterTable& t) {
    Json j;
    Json cls = Json::array();
    for (const auto& c : t.classes) {
        Json members = Json::array();
        for (int m : c.members) members.push_back(t.X->name(m));
        cls.push_back({{"rep", t.X->name(c.representative)}, {"members", members}});
    }
    j["classes"] = cls;
    Json rows = Json::array();
    for (size_t r = 0; r < t.rows.size(); ++r) {
        Json row;
        row["degree"] = t.degrees[r];
        Json vals = Json::array();
        for (const auto& c : t.classes) vals.push_back(cyclotomic_to_json(t.rows[r].at(c.representative)));
        row["values"] = vals;
        rows.push_back(std::move(row));
    }
    j["rows"] = rows;
    return j;
}

std::string chartable_to_csv(const CharacterTable& t) {
    int cond = 1;
    for (const auto& r : t.rows)
        for (const auto& v : r.vals) cond = std::lcm(cond, v.conductor());
    std::string out = conductor_header(cond) + "\nclass";
    for (const auto& c : t.classes) out += "," + t.X->name(c.representative);
    out += "\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        out += "chi" + std::to_string(r);
        for (const auto& c : t.classes) out += "," + t.rows[r].at(c.representative).to_string();
        out += "\n";
    }
    return out;
}

Json simples_to_json(const CategoryD& cat) {
    const FiniteGroup& X = cat.group();
    Json arr = Json::array();
    for (const auto& V : cat.simples()) {
        Json j;
        j["label"] = V.label;
        Json members = Json::array();
        for (int m : V.cls.members) members.push_back(X.name(m));
        j["class"] = members;
        j["base"] = X.name(V.base);
        Json stab = Json::array();
        for (int s : V.stab) stab.push_back(X.name(s));
        j["stabilizer"] = stab;
        j["dim"] = cat.dim_D(V);
        j["theta"] = cat.ribbon_theta(V).to_string();
        j["char"] = class_function_to_json(X, V.chi);
        arr.push_back(std::move(j));
    }
    return arr;
}

Ordering ordering_from_json(const CategoryD& cat, const Json& j) {
    const FiniteGroup& X = cat.group();
    Ordering out;
    std::set<int> used;
    try {
        for (const auto& entry : j) {
            const std::string cls = entry.at("class").get<std::string>();
            int rep = X.index_of(cls);
            if (rep < 0) throw InvalidInput("ordering: unknown class representative " + cls);
            int found = -1;
            for (size_t k = 0; k < cat.simples().size(); ++k) {
                const auto& V = cat.simples()[k];
                if (!std::binary_search(V.cls.members.begin(), V.cls.members.end(), rep)) continue;
                bool match = true;
                for (auto it = entry.at("char").begin(); it != entry.at("char").end() && match; ++it) {
                    int el = X.index_of(it.key());
                    if (el < 0) throw InvalidInput("ordering: unknown element " + it.key());
                    Cyclotomic want = Cyclotomic::parse(it.value().get<std::string>(), cat.conductor());
                    match = (cat.char_at(V, rep, el) == want);
                }
                if (match) {
                    found = static_cast<int>(k);
                    break;
                }
            }
            if (found < 0) throw InvalidInput("ordering: no simple matches entry " +
                                              entry.value("label", std::string("?")));
            if (!used.insert(found).second)
                throw InvalidInput("ordering: entry matches an already-used simple");
            out.permutation.push_back(found);
            out.labels.push_back(entry.value("label", cat.simples()[found].label));
        }
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed ordering file: ") + e.what());
    }
    if (out.permutation.size() != cat.simples().size())
        throw InvalidInput("ordering file must enumerate all simples");
    return out;
}

Json report_to_json(const ModularData& md, const ModularityReport& vr) {
    Json j;
    Json rel = Json::array();
    for (const auto& item : md.report.items) {
        Json r;
        r["name"] = item.name;
        r["holds"] = item.holds;
        if (!item.holds) r["witness"] = item.witness;
        rel.push_back(std::move(r));
    }
    j["relations"] = rel;
    j["relations_all_hold"] = md.report.all();
    j["P_plus"] = cyclotomic_to_json(md.p_plus);
    j["P_minus"] = cyclotomic_to_json(md.p_minus);
    if (md.sqrt_pp) {
        j["sqrt_P_plus_P_minus"] = md.sqrt_pp->get_num().get_str();
    } else {
        j["sqrt_P_plus_P_minus"] = nullptr;
    }
    j["modularity"] = {{"finitely_many_simples", vr.finitely_many},
                       {"schur_labels_distinct", vr.schur_labels_distinct},
                       {"s_matrix_invertible", vr.s_invertible}};
    j["order"] = md.labels;
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace modcat
