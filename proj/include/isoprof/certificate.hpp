#pragma once

#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace isoprof {

enum class CertKind {
    verified,  // a numerical check that ran and has a margin
    assumed,   // a cited theorem taken as hypothesis, not re-proved here
    info       // computed quantities reported for the record
};

/// Outcome of one verification step.
struct Certificate {
    std::string id;         // stable machine id, dot-separated
    std::string statement;  // human-readable claim
    std::string method;     // series | grid | chord | ratio | closed_form | quadrature | ...
    std::string range;      // range or grid the claim was checked on
    double worst_margin = std::numeric_limits<double>::quiet_NaN();
    bool pass = true;
    CertKind kind = CertKind::verified;
    std::string details;

    static Certificate assumed(std::string id, std::string statement);
    static Certificate info(std::string id, std::string statement, std::string details = "");
};

/// Ordered collection of certificates plus the report writers.
class CertificateSet {
public:
    Certificate& add(Certificate c);
    void append(const CertificateSet& other);

    const std::vector<Certificate>& all() const { return certs_; }
    bool all_verified_pass() const;
    std::size_t failed_count() const;
    const Certificate* find(const std::string& id) const;

    /// One line per statement: status, id, method, range, margin.
    void write_text(std::ostream& os) const;
    /// Machine-readable key=value lines.
    void write_kv(std::ostream& os) const;

private:
    std::vector<Certificate> certs_;
};

/// Full-precision, locale-independent formatting used by every writer so
/// identical runs produce byte-identical files.
std::string format_double(double v);

}  // namespace isoprof
