#include "lefschetz/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lefschetz {

using json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format: " + name);
}

std::string verdict_name(Verdict v) {
    return v == Verdict::Holds ? "holds" : "fails";
}

std::string alphas_string(const std::vector<int>& alphas, char sep) {
    std::string out;
    for (int a : alphas) {
        if (!out.empty()) out += sep;
        out += std::to_string(a);
    }
    return out;
}

namespace {

json witness_terms_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json term;
        term["monomial"] = m.exponents();
        term["coeff"] = c.get_str();
        terms.push_back(std::move(term));
    }
    return terms;
}

json to_json(const CheckReport& r) {
    json out;
    if (r.ideal) {
        json ideal;
        ideal["r"] = r.ideal->vars();
        json gens = json::array();
        for (const auto& g : r.ideal->generators()) gens.push_back(g.exponents());
        ideal["generators"] = std::move(gens);
        out["ideal"] = std::move(ideal);
    }
    out["char"] = r.chr.value();
    if (!r.h.values.empty()) out["h_vector"] = r.h.values;
    if (r.socle_info) {
        json s;
        s["degrees"] = r.socle_info->per_degree;
        s["is_level"] = r.socle_info->is_level;
        s["socle_degree"] = r.socle_info->socle_degree;
        out["socle"] = std::move(s);
    }
    if (r.wlp) {
        json w;
        w["verdict"] = verdict_name(r.wlp->verdict);
        if (r.wlp->first_failure) {
            w["first_failure"] = *r.wlp->first_failure;
        } else {
            w["first_failure"] = nullptr;
        }
        json rows = json::array();
        for (const auto& row : r.wlp->rows) {
            json jr;
            jr["t"] = row.t;
            jr["h_t"] = row.h_t;
            jr["h_t1"] = row.h_t1;
            jr["rank"] = row.rank;
            jr["maximal"] = row.maximal;
            rows.push_back(std::move(jr));
        }
        w["rows"] = std::move(rows);
        if (r.wlp->witness) {
            w["witness"] = witness_terms_json(*r.wlp->witness);
        }
        if (!r.wlp->witness_note.empty()) w["witness_note"] = r.wlp->witness_note;
        out["wlp"] = std::move(w);
    }
    if (r.slp) {
        json s;
        s["verdict"] = verdict_name(r.slp->verdict);
        if (r.slp->first_failure) {
            s["first_failure"] = {r.slp->first_failure->first, r.slp->first_failure->second};
        } else {
            s["first_failure"] = nullptr;
        }
        json rows = json::array();
        for (const auto& row : r.slp->rows) {
            json jr;
            jr["i"] = row.i;
            jr["d"] = row.d;
            jr["h_i"] = row.h_i;
            jr["h_id"] = row.h_id;
            jr["rank"] = row.rank;
            jr["maximal"] = row.maximal;
            rows.push_back(std::move(jr));
        }
        s["rows"] = std::move(rows);
        out["slp"] = std::move(s);
    }
    if (r.witness) {
        json w;
        w["degree"] = r.witness->degree;
        w["claimed_char"] = r.witness->claimed_char.value();
        w["degenerate"] = r.witness->degenerate;
        w["terms"] = witness_terms_json(r.witness->f);
        out["witness"] = std::move(w);
    }
    if (r.verification) {
        json v;
        v["f_nonzero"] = r.verification->f_nonzero;
        v["product_zero"] = r.verification->product_zero;
        v["hilbert_le"] = r.verification->hilbert_le;
        v["concludes_failure"] = r.verification->concludes_failure();
        out["verification"] = std::move(v);
    }
    return out;
}

std::string to_csv(const CheckReport& r) {
    std::ostringstream out;
    out << "run_id,family,r,d,alphas,char,t,h_t,h_t1,rank,maximal\n";
    const std::string prefix = r.run_id + "," + r.family.family_name() + "," +
                               std::to_string(r.family.r) + "," +
                               std::to_string(r.family.d) + "," +
                               alphas_string(r.family.alphas) + "," + r.chr.str();
    if (r.wlp) {
        for (const auto& row : r.wlp->rows) {
            out << prefix << "," << row.t << "," << row.h_t << "," << row.h_t1 << ","
                << row.rank << "," << (row.maximal ? "true" : "false") << "\n";
        }
    } else {
        // no per-degree rows: still emit the h-vector coordinates
        for (std::size_t t = 0; t < r.h.values.size(); ++t) {
            out << prefix << "," << t << "," << r.h.values[t] << ",,,\n";
        }
    }
    return out.str();
}

std::string to_table(const CheckReport& r) {
    std::ostringstream out;
    if (r.ideal) {
        out << "ideal (r=" << r.ideal->vars() << "): " << render_ideal(*r.ideal) << "\n";
    }
    out << "char: " << r.chr.str() << "\n";
    if (!r.h.values.empty()) {
        out << "h-vector: (";
        for (std::size_t i = 0; i < r.h.values.size(); ++i) {
            if (i) out << ",";
            out << r.h.values[i];
        }
        out << ")\n";
    }
    if (r.socle_info) {
        out << "socle degree: " << r.socle_info->socle_degree
            << (r.socle_info->is_level ? "  (level algebra)" : "  (not level)") << "\n";
        out << "socle dims: ";
        for (std::size_t i = 0; i < r.socle_info->per_degree.size(); ++i) {
            if (i) out << ",";
            out << r.socle_info->per_degree[i];
        }
        out << "\n";
    }
    if (r.wlp) {
        out << "WLP: " << verdict_name(r.wlp->verdict);
        if (r.wlp->first_failure) out << " (first failure at t=" << *r.wlp->first_failure << ")";
        out << "\n";
        out << "   t  h_t  h_t+1  rank  maximal\n";
        for (const auto& row : r.wlp->rows) {
            out << "  " << row.t << "  " << row.h_t << "  " << row.h_t1 << "  "
                << row.rank << "  " << (row.maximal ? "yes" : "NO") << "\n";
        }
        if (r.wlp->witness) {
            out << "kernel witness: " << r.wlp->witness->str() << "\n";
        }
        if (!r.wlp->witness_note.empty()) out << r.wlp->witness_note << "\n";
    }
    if (r.slp) {
        out << "SLP: " << verdict_name(r.slp->verdict);
        if (r.slp->first_failure) {
            out << " (first failure at i=" << r.slp->first_failure->first
                << ", d=" << r.slp->first_failure->second << ")";
        }
        out << "\n";
        out << "   i  d  h_i  h_i+d  rank  maximal\n";
        for (const auto& row : r.slp->rows) {
            out << "  " << row.i << "  " << row.d << "  " << row.h_i << "  " << row.h_id
                << "  " << row.rank << "  " << (row.maximal ? "yes" : "NO") << "\n";
        }
    }
    if (r.witness) {
        out << "witness (degree " << r.witness->degree << ", claimed char "
            << r.witness->claimed_char.str() << ")"
            << (r.witness->degenerate ? " DEGENERATE" : "") << ": "
            << r.witness->f.str() << "\n";
    }
    if (r.verification) {
        out << "verification: f != 0: " << (r.verification->f_nonzero ? "yes" : "no")
            << ", f*l == 0: " << (r.verification->product_zero ? "yes" : "no")
            << ", h_t <= h_t+1: " << (r.verification->hilbert_le ? "yes" : "no")
            << " => " << (r.verification->concludes_failure() ? "WLP fails at t="
                          + std::to_string(r.witness ? r.witness->degree : 0)
                                                           : "inconclusive")
            << "\n";
    }
    return out.str();
}

} // namespace

std::string emit_report(const CheckReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: return to_json(report).dump(2) + "\n";
    case OutputFormat::Csv: return to_csv(report);
    case OutputFormat::Table: return to_table(report);
    }
    throw std::logic_error("unreachable");
}

} // namespace lefschetz
