#include "isoprof/certificate.hpp"

#include <cstdio>
#include <iomanip>
#include <limits>

namespace isoprof {

Certificate Certificate::assumed(std::string id, std::string statement) {
    Certificate c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.method = "assumed";
    c.kind = CertKind::assumed;
    return c;
}

Certificate Certificate::info(std::string id, std::string statement, std::string details) {
    Certificate c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.method = "computed";
    c.kind = CertKind::info;
    c.details = std::move(details);
    return c;
}

Certificate& CertificateSet::add(Certificate c) {
    certs_.push_back(std::move(c));
    return certs_.back();
}

void CertificateSet::append(const CertificateSet& other) {
    certs_.insert(certs_.end(), other.certs_.begin(), other.certs_.end());
}

bool CertificateSet::all_verified_pass() const {
    for (const Certificate& c : certs_)
        if (c.kind == CertKind::verified && !c.pass) return false;
    return true;
}

std::size_t CertificateSet::failed_count() const {
    std::size_t n = 0;
    for (const Certificate& c : certs_)
        if (c.kind == CertKind::verified && !c.pass) ++n;
    return n;
}

const Certificate* CertificateSet::find(const std::string& id) const {
    for (const Certificate& c : certs_)
        if (c.id == id) return &c;
    return nullptr;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

const char* status_of(const Certificate& c) {
    switch (c.kind) {
        case CertKind::assumed: return "ASSUMED";
        case CertKind::info: return "INFO";
        case CertKind::verified: return c.pass ? "PASS" : "FAIL";
    }
    return "?";
}

}  // namespace

void CertificateSet::write_text(std::ostream& os) const {
    for (const Certificate& c : certs_) {
        os << "[" << status_of(c) << "] " << c.id << " | " << c.statement;
        if (!c.range.empty()) os << " | range: " << c.range;
        if (c.kind == CertKind::verified)
            os << " | method: " << c.method << " | margin: " << format_double(c.worst_margin);
        if (!c.details.empty()) os << " | " << c.details;
        os << "\n";
    }
    os << "summary: " << certs_.size() << " statements, " << failed_count() << " failed\n";
}

void CertificateSet::write_kv(std::ostream& os) const {
    for (const Certificate& c : certs_) {
        const std::string p = "cert." + c.id;
        os << p << ".status=" << status_of(c) << "\n";
        os << p << ".statement=" << c.statement << "\n";
        os << p << ".method=" << c.method << "\n";
        if (!c.range.empty()) os << p << ".range=" << c.range << "\n";
        if (c.kind == CertKind::verified) {
            os << p << ".pass=" << (c.pass ? "true" : "false") << "\n";
            os << p << ".margin=" << format_double(c.worst_margin) << "\n";
        }
        if (!c.details.empty()) os << p << ".details=" << c.details << "\n";
    }
    os << "summary.count=" << certs_.size() << "\n";
    os << "summary.failed=" << failed_count() << "\n";
}

}  // namespace isoprof
