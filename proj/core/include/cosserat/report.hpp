#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cosserat {

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
    std::string name;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::Pass;
    std::string reason;  ///< set for skipped checks
};

/// A measured quantity that is reported without a pass/fail verdict, e.g. a
/// printed relation that disagrees with the derived one.
struct Note {
    std::string name;
    double value = 0.0;
    std::string comment;
};

class VerificationReport {
public:
    /// Records a check; it passes iff error <= tolerance (NaN fails).
    void add(std::string name, double max_abs_error, double tolerance);
    void skip(std::string name, std::string reason);
    void note(std::string name, double value, std::string comment);
    void merge(const VerificationReport& other);

    const std::vector<Check>& checks() const { return checks_; }
    const std::vector<Note>& notes() const { return notes_; }
    const Check* find(const std::string& name) const;

    /// True iff no check failed.  Skipped checks do not fail the report.
    bool all_pass() const;
    std::size_t failures() const;

    /// check_name,max_abs_error,tolerance,pass  (pass is true/false/skipped)
    void write_csv(std::ostream& os) const;
    /// name,value,comment
    void write_notes_csv(std::ostream& os) const;

private:
    std::vector<Check> checks_;
    std::vector<Note> notes_;
};

}  // namespace cosserat
