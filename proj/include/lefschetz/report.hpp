#ifndef LEFSCHETZ_REPORT_HPP
#define LEFSCHETZ_REPORT_HPP

#include <optional>
#include <string>

#include "lefschetz/engine.hpp"

namespace lefschetz {

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& name);

/// Everything one check run produced for one (ideal, characteristic) pair.
struct CheckReport {
    std::string run_id;
    FamilySpec family;
    std::optional<MonomialIdeal> ideal;
    Characteristic chr;
    HVector h;
    std::optional<SocleInfo> socle_info;
    std::optional<WlpReport> wlp;
    std::optional<SlpReport> slp;
    std::optional<Witness> witness;
    std::optional<VerificationRecord> verification;
};

/// Serializes a report; byte-identical across runs for identical inputs.
/// JSON follows the stable schema (ideal/char/h_vector/socle/wlp keys),
/// CSV flattens per-degree rows under the fixed header
/// run_id,family,r,d,alphas,char,t,h_t,h_t1,rank,maximal.
std::string emit_report(const CheckReport& report, OutputFormat format);

std::string verdict_name(Verdict v);

/// "2;3;4" style joined exponent list; the separator avoids commas so the
/// result can sit inside one CSV field or a run id.
std::string alphas_string(const std::vector<int>& alphas, char sep = ';');

} // namespace lefschetz

#endif
