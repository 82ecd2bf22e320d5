#include "schur/render.hpp"

#include <sstream>

#include "json.hpp"

namespace schur {

using nlohmann::json;

namespace {

std::string norm_body(const SchurResult& r) {
    std::ostringstream os;
    os << "[ ";
    bool first = true;
    if (r.symbolic) {
        for (int e : r.exponents) {
            if (!first) os << ", ";
            first = false;
            if (e == 1)
                os << "p";
            else
                os << "p^" << e;
        }
    } else {
        for (const auto& d : r.divisors) {
            if (!first) os << ", ";
            first = false;
            os << d.get_str();
        }
    }
    os << (first ? "]" : " ]");
    return os.str();
}

json norm_json(const SchurResult& r) {
    json arr = json::array();
    if (r.symbolic)
        for (int e : r.exponents) arr.push_back(e);
    else
        for (const auto& d : r.divisors) arr.push_back(d.get_str());
    return arr;
}

} // namespace

std::string render_schur_text(const SchurResult& r) {
    std::ostringstream os;
    os << "norm := " << norm_body(r);
    if (r.symbolic) {
        os << ", pseudounits := [ ";
        bool first = true;
        for (const auto& f : r.ledger) {
            if (!first) os << ", ";
            first = false;
            os << f.to_string();
        }
        os << (first ? "]" : " ]");
    }
    return os.str();
}

std::string render_schur_json(const SchurResult& r) {
    json j;
    j["kind"] = r.symbolic ? "symbolic" : "concrete";
    j["norm"] = norm_json(r);
    json units = json::array();
    for (const auto& f : r.ledger) units.push_back(f.to_string());
    j["pseudo_units"] = units;
    j["budget_exceeded"] = r.budget_exceeded;
    if (r.budget_exceeded) j["exceeded_cap"] = r.exceeded_cap;
    j["free_rank"] = r.free_rank;
    j["valid"] = r.valid;
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    json contents = json::array();
    for (const auto& c : r.contents) contents.push_back(c.get_str());
    j["contents"] = contents;
    return j.dump(2);
}

namespace {

std::string entry_string(const PElement& e, const std::string& label) {
    // "1" and "-1" collapse onto the basis label; single terms multiply in
    // front, anything else is parenthesized.
    if (e == PElement(1)) return label;
    if (e == PElement(-1)) return "-" + label;
    std::string s = e.to_string();
    bool simple = true;
    int nonzero = 0;
    for (int i = 0; i <= e.degree(); ++i) {
        const RationalFunction& c = e.coeff(i);
        if (c.is_zero()) continue;
        ++nonzero;
        if (!c.den().is_one() || c.num().term_count() > 1) simple = false;
    }
    if (nonzero > 1) simple = false;
    if (!simple) return "(" + s + ")*" + label;
    return s + "*" + label;
}

std::string row_string(const RelationMatrix& M, const RelationRow& row) {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < M.ncols(); ++j) {
        const PElement& e = row.entries[static_cast<std::size_t>(j)];
        if (e.is_zero()) continue;
        std::string s = entry_string(e, M.basis.label(j));
        bool neg = !s.empty() && s[0] == '-';
        if (first) {
            os << s;
        } else {
            os << (neg ? " - " : " + ") << (neg ? s.substr(1) : s);
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string render_matrix_text(const RelationMatrix& M) {
    std::ostringstream os;
    for (const auto& row : M.rows) os << row.label << " : " << row_string(M, row) << "\n";
    return os.str();
}

std::string render_matrix_json(const RelationMatrix& M) {
    json j;
    j["ncols"] = M.ncols();
    j["nrows"] = M.nrows();
    json basis = json::array();
    for (int c = 0; c < M.ncols(); ++c) basis.push_back(M.basis.label(c));
    j["basis"] = basis;
    json rows = json::array();
    for (const auto& row : M.rows) {
        json r;
        r["label"] = row.label;
        json entries = json::array();
        for (const auto& e : row.entries) entries.push_back(e.to_string());
        r["entries"] = entries;
        rows.push_back(r);
    }
    j["rows"] = rows;
    j["residual"] = M.residual;
    return j.dump(2);
}

namespace {

void tree_text_rec(const CaseNode& node, int depth, std::ostringstream& os) {
    std::string indent(static_cast<std::size_t>(2 * depth), ' ');
    os << indent << (node.chain.empty() ? "*" : node.label()) << ": ";
    if (node.infeasible) {
        os << "N/A\n";
        return;
    }
    os << render_schur_text(node.result);
    if (node.result.budget_exceeded)
        os << " [budget exceeded: " << node.result.exceeded_cap << "]";
    os << "\n";
    for (const auto& f : node.unresolved)
        os << indent << "  UNRESOLVED: " << f.to_string() << "\n";
    for (const auto& child : node.children) tree_text_rec(child, depth + 1, os);
}

json tree_json_rec(const CaseNode& node) {
    json j;
    j["substitution"] = node.chain.empty() ? "*" : node.label();
    if (node.infeasible) {
        j["infeasible"] = true;
        return j;
    }
    j["infeasible"] = false;
    j["norm"] = norm_json(node.result);
    json units = json::array();
    for (const auto& f : node.result.ledger) units.push_back(f.to_string());
    j["pseudo_units"] = units;
    j["budget_exceeded"] = node.result.budget_exceeded;
    json unresolved = json::array();
    for (const auto& f : node.unresolved) unresolved.push_back(f.to_string());
    j["unresolved"] = unresolved;
    json children = json::array();
    for (const auto& child : node.children) children.push_back(tree_json_rec(child));
    j["children"] = children;
    return j;
}

} // namespace

std::string render_tree_text(const CaseNode& root) {
    std::ostringstream os;
    tree_text_rec(root, 0, os);
    return os.str();
}

std::string render_tree_json(const CaseNode& root) { return tree_json_rec(root).dump(2); }

namespace {

std::string norm_list(const std::vector<mpz_class>& values) {
    std::ostringstream os;
    os << "[ ";
    bool first = true;
    for (const auto& v : values) {
        if (!first) os << ", ";
        first = false;
        os << v.get_str();
    }
    os << (first ? "]" : " ]");
    return os.str();
}

std::string assignment_string(const std::map<std::string, long>& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : a) {
        if (!first) os << ",";
        first = false;
        os << k << "=" << v;
    }
    return first ? "-" : os.str();
}

} // namespace

std::string render_verify_text(const VerifyReport& report) {
    std::ostringstream os;
    for (const auto& [prime, exhaustive] : report.modes) {
        long match = 0, mismatch = 0, uncovered = 0, inconsistent = 0;
        for (const auto& rec : report.records) {
            if (rec.prime != prime) continue;
            if (rec.status == "match")
                ++match;
            else if (rec.status == "mismatch")
                ++mismatch;
            else if (rec.status == "uncovered")
                ++uncovered;
            else
                ++inconsistent;
        }
        os << "p=" << prime << " (" << (exhaustive ? "exhaustive" : "sampled") << "): " << match
           << " match, " << mismatch << " mismatch, " << uncovered << " uncovered, "
           << inconsistent << " inconsistent\n";
    }
    for (long p : report.skipped_primes)
        os << "p=" << p << ": skipped (excluded without --allow-small-primes)\n";
    for (const auto& rec : report.records) {
        if (rec.status == "match") continue;
        std::string upper = rec.status;
        for (auto& c : upper) c = static_cast<char>(::toupper(static_cast<unsigned char>(c)));
        os << upper << " p=" << rec.prime << " " << assignment_string(rec.assignment);
        if (rec.status == "mismatch")
            os << ": concrete " << norm_list(rec.concrete_norm) << " vs symbolic "
               << norm_list(rec.symbolic_norm) << " at node " << rec.node;
        if (rec.status == "uncovered") os << ": no applicable case";
        os << "\n";
    }
    if (report.skipped_constraint > 0)
        os << "skipped (constraint): " << report.skipped_constraint << "\n";
    os << "total: " << report.match << " match, " << report.mismatch << " mismatch, "
       << report.uncovered << " uncovered, " << report.inconsistent << " inconsistent\n";
    return os.str();
}

std::string render_verify_json(const VerifyReport& report) {
    json j;
    j["match"] = report.match;
    j["mismatch"] = report.mismatch;
    j["uncovered"] = report.uncovered;
    j["inconsistent"] = report.inconsistent;
    j["skipped_constraint"] = report.skipped_constraint;
    json modes = json::array();
    for (const auto& [prime, exhaustive] : report.modes)
        modes.push_back({{"prime", prime}, {"exhaustive", exhaustive}});
    j["modes"] = modes;
    json recs = json::array();
    for (const auto& rec : report.records) {
        if (rec.status == "match") continue; // failures only; matches are counted
        json r;
        r["prime"] = rec.prime;
        r["assignment"] = rec.assignment;
        r["status"] = rec.status;
        json cn = json::array(), sn = json::array();
        for (const auto& v : rec.concrete_norm) cn.push_back(v.get_str());
        for (const auto& v : rec.symbolic_norm) sn.push_back(v.get_str());
        r["concrete_norm"] = cn;
        r["symbolic_norm"] = sn;
        r["node"] = rec.node;
        recs.push_back(r);
    }
    j["failures"] = recs;
    j["ok"] = report.ok();
    return j.dump(2);
}

std::string render_consistency_text(const ConsistencyReport& report) {
    std::ostringstream os;
    if (report.ok) {
        os << "consistency: ok";
        if (report.probabilistic) os << " (probabilistic)";
        os << "\n";
        return os.str();
    }
    os << "consistency: FAILED\n";
    for (const auto& v : report.violations) {
        os << v.kind;
        if (v.i > 0) os << " i=" << v.i;
        if (v.j > 0 && v.j != v.i) os << " j=" << v.j;
        if (v.h > 0) os << " h=" << v.h;
        os << ": " << v.relation << ": got " << v.left;
        if (v.right != v.left) os << ", want " << v.right;
        os << "\n";
    }
    return os.str();
}

std::string render_consistency_json(const ConsistencyReport& report) {
    json j;
    j["ok"] = report.ok;
    j["probabilistic"] = report.probabilistic;
    json vs = json::array();
    for (const auto& v : report.violations) {
        json r;
        r["kind"] = v.kind;
        r["i"] = v.i;
        r["j"] = v.j;
        r["h"] = v.h;
        r["relation"] = v.relation;
        r["left"] = v.left;
        r["right"] = v.right;
        vs.push_back(r);
    }
    j["violations"] = vs;
    return j.dump(2);
}

} // namespace schur
