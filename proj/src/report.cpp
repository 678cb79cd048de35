#include "cdl/report.hpp"

namespace cdl::report {

json matrix_json(const seed::IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

seed::IntMat matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array");
    int n = static_cast<int>(j.size());
    seed::IntMat m(n, static_cast<int>(j[0].size()));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(j[i].size()) != m.cols())
            throw std::invalid_argument("ragged matrix rows");
        for (int k = 0; k < m.cols(); ++k) m.at(i, k) = j[i][k].get<long long>();
    }
    return m;
}

seed::IntMat exchange_matrix_from_json(const json& j) {
    if (j.contains("arrows")) {
        seed::Quiver q;
        for (auto& a : j["arrows"]) {
            int i = a[0].get<int>() - 1, k = a[1].get<int>() - 1, m = a[2].get<int>();
            if (i < 0 || k < 0 || m <= 0) throw std::invalid_argument("bad arrow entry");
            q.n = std::max(q.n, std::max(i, k) + 1);
            q.arrows[{i, k}] = m;
        }
        seed::IntMat B = seed::matrix_of(q);
        seed::quiver_of(B);  // validates the no-2-cycle convention
        return B;
    }
    if (!j.contains("b")) throw std::invalid_argument("missing \"b\" or \"arrows\" entry");
    seed::IntMat B = matrix_from_json(j["b"]);
    if (B.rows() != B.cols()) throw std::invalid_argument("exchange matrix must be square");
    return B;
}

json poly_json(const alg::MultiPoly& p) {
    json out = json::array();
    for (auto& [e, c] : p.terms()) {
        json ent = json::array();
        json ev = json::array();
        for (auto x : e) ev.push_back(x);
        ent.push_back(ev);
        ent.push_back(c.get_num().get_str());
        ent.push_back(c.get_den().get_str());
        out.push_back(ent);
    }
    return out;
}

json factored_json(const alg::FactoredSF& f) {
    json out;
    json mono = json::array();
    for (auto x : f.mono()) mono.push_back(x);
    out["monomial"] = mono;
    json facs = json::array();
    for (auto& [id, e] : f.factors()) {
        json ent = json::array();
        ent.push_back(poly_json(alg::AtomTable::instance().poly(id)));
        ent.push_back(e);
        facs.push_back(ent);
    }
    out["factors"] = facs;
    return out;
}

json quiver_json(const seed::Quiver& q) {
    json arrows = json::array();
    for (auto& [ij, m] : q.arrows) arrows.push_back({ij.first + 1, ij.second + 1, m});
    return json{{"arrows", arrows}};
}

json run_json(const pattern::PatternRun& run) {
    json out;
    out["schema"] = "cdl/1";
    out["b"] = matrix_json(run.B.front());
    out["delta"] = run.delta;
    json word = json::array();
    for (int k : run.dirs) word.push_back(k + 1);
    out["word"] = word;
    json steps = json::array();
    for (long s = 0; s <= run.P; ++s) {
        json st;
        st["B"] = matrix_json(run.B[static_cast<size_t>(s)]);
        st["C"] = matrix_json(run.C[static_cast<size_t>(s)]);
        st["G"] = matrix_json(run.G[static_cast<size_t>(s)]);
        json fl = json::array();
        for (int i = 0; i < run.n; ++i)
            fl.push_back(poly_json(run.F[static_cast<size_t>(s)][static_cast<size_t>(i)]));
        st["F"] = fl;
        steps.push_back(st);
    }
    out["steps"] = steps;
    out["eps"] = run.eps;
    json cps = json::array();
    for (auto& cp : run.c_plus) {
        json v = json::array();
        for (auto x : cp) v.push_back(x);
        cps.push_back(v);
    }
    out["c_plus"] = cps;
    return out;
}

pattern::MutationWord word_from_run_json(const json& j) {
    seed::IntMat B = exchange_matrix_from_json(j);
    std::vector<int> dirs;
    for (auto& k : j.at("word")) dirs.push_back(k.get<int>() - 1);
    return pattern::make_word(B, dirs);
}

json csd_json(const scatter::Rank2Diagram& d) {
    json out;
    out["schema"] = "cdl/1";
    out["delta"] = d.delta;
    out["degree"] = d.trunc;
    json walls = json::array();
    for (auto& w : d.walls) {
        json jw;
        jw["ray"] = {w.ray[0], w.ray[1]};
        jw["normal"] = {w.normal[0], w.normal[1]};
        jw["incoming"] = w.incoming;
        json facs = json::array();
        for (auto& f : w.factors) {
            Rat s = f.exponent / scatter::normalization_factor(f.n, d.delta);
            json ent = json::array();
            ent.push_back({f.n[0], f.n[1]});
            ent.push_back(s.get_num().get_str());
            facs.push_back(ent);
        }
        jw["factors"] = facs;
        walls.push_back(jw);
    }
    out["walls"] = walls;
    return out;
}

json perm_json(const seed::Perm& p) {
    json out = json::array();
    for (int v : p) out.push_back(v + 1);
    return out;
}

}  // namespace cdl::report
