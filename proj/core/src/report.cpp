#include "blockcensus/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace blockcensus {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::survives: return "SURVIVES";
        case CheckStatus::excluded: return "EXCLUDED";
        case CheckStatus::data_missing: return "DATA-MISSING";
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::mismatch: return "MISMATCH";
    }
    return "?";
}

std::string slug(const std::string& s) {
    std::string out;
    bool in_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out += '-';
        in_space = false;
        out += c;
    }
    return out;
}

std::string render_report(const std::vector<CheckLine>& lines,
                          const std::optional<std::string>& classification_line, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::machine) {
        for (const CheckLine& l : lines) {
            out << "CHECK " << l.case_id << " " << to_string(l.status);
            if (!l.witness.empty()) out << " " << l.witness;
            out << "\n";
        }
        if (classification_line) out << *classification_line << "\n";
        return out.str();
    }

    std::string family;
    for (const CheckLine& l : lines) {
        if (l.family != family) {
            family = l.family;
            out << "== " << family << " ==\n";
        }
        out << "  " << l.case_id << "  " << to_string(l.status);
        if (!l.witness.empty()) out << "  " << l.witness;
        out << "\n";
    }
    if (classification_line) out << "\n" << *classification_line << "\n";
    return out.str();
}

}  // namespace blockcensus
