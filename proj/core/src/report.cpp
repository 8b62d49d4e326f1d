#include "cosserat/report.hpp"

#include <ostream>

#include "cosserat/csv.hpp"

namespace cosserat {

void VerificationReport::add(std::string name, double err, double tol) {
    const CheckStatus st = (err <= tol) ? CheckStatus::Pass : CheckStatus::Fail;
    checks_.push_back({std::move(name), err, tol, st, {}});
}

void VerificationReport::skip(std::string name, std::string reason) {
    checks_.push_back({std::move(name), 0.0, 0.0, CheckStatus::Skipped, std::move(reason)});
}

void VerificationReport::note(std::string name, double value, std::string comment) {
    notes_.push_back({std::move(name), value, std::move(comment)});
}

void VerificationReport::merge(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

const Check* VerificationReport::find(const std::string& name) const {
    for (const Check& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    std::size_t n = 0;
    for (const Check& c : checks_)
        if (c.status == CheckStatus::Fail) ++n;
    return n;
}

namespace {

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

void VerificationReport::write_csv(std::ostream& os) const {
    os << "check_name,max_abs_error,tolerance,pass\n";
    for (const Check& c : checks_) {
        const char* verdict = c.status == CheckStatus::Pass ? "true" : c.status == CheckStatus::Fail ? "false" : "skipped";
        os << quote(c.name) << ',' << format_double(c.max_abs_error) << ',' << format_double(c.tolerance) << ','
           << verdict << '\n';
    }
}

void VerificationReport::write_notes_csv(std::ostream& os) const {
    os << "name,value,comment\n";
    for (const Note& n : notes_) os << quote(n.name) << ',' << format_double(n.value) << ',' << quote(n.comment) << '\n';
}

}  // namespace cosserat
