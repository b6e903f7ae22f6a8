#include "records.hpp"

#include <fstream>
#include <sstream>

namespace ssz::tools {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

[[noreturn]] void fail(const std::string& path, std::size_t lineno, const std::string& what) {
    std::ostringstream os;
    os << path << ":" << lineno << ": " << what;
    throw invalid_input(os.str());
}

BigInt parse_int(const std::string& s, const std::string& path, std::size_t lineno) {
    try {
        if (s.empty()) throw std::invalid_argument("empty");
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        fail(path, lineno, "not an integer: '" + s + "'");
    }
}

}  // namespace

CurveRecord builtin_curve() {
    CurveRecord r;
    r.label = "e83";
    r.p = 83;
    r.a1 = 1;
    r.a2 = 1;
    r.a3 = 1;
    r.a4 = 1;
    r.a6 = 0;
    r.rank = 1;
    return r;
}

std::vector<CurveRecord> parse_curves(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("parse_curves: cannot open " + path);
    static const std::string kHeader = "label,p,a1,a2,a3,a4,a6,rank";
    std::vector<CurveRecord> out;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            if (t != kHeader) fail(path, lineno, "expected header '" + kHeader + "'");
            header_seen = true;
            continue;
        }
        auto fields = split_csv(t);
        if (fields.size() != 8) fail(path, lineno, "expected 8 fields, got " +
                                                       std::to_string(fields.size()));
        CurveRecord r;
        r.label = fields[0];
        if (r.label.empty()) fail(path, lineno, "empty label");
        BigInt p = parse_int(fields[1], path, lineno);
        if (p <= 0 || !p.fits_ulong_p()) fail(path, lineno, "conductor out of range");
        r.p = static_cast<std::uint64_t>(p.get_ui());
        r.a1 = parse_int(fields[2], path, lineno);
        r.a2 = parse_int(fields[3], path, lineno);
        r.a3 = parse_int(fields[4], path, lineno);
        r.a4 = parse_int(fields[5], path, lineno);
        r.a6 = parse_int(fields[6], path, lineno);
        if (!fields[7].empty()) {
            BigInt rk = parse_int(fields[7], path, lineno);
            if (rk < 0 || rk > 1000) fail(path, lineno, "rank out of range");
            r.rank = static_cast<int>(rk.get_si());
        }
        out.push_back(std::move(r));
    }
    if (!header_seen) fail(path, lineno, "missing header");
    return out;
}

CurveQ make_curve(const CurveRecord& rec) {
    CurveQ E(rec.label, rec.a1, rec.a2, rec.a3, rec.a4, rec.a6, rec.p, rec.rank);
    // the model must have good reduction away from p
    BigInt d = abs(E.disc());
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(rec.p)))
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(rec.p));
    if (d != 1)
        throw invalid_input("curve " + rec.label +
                            ": discriminant has prime factors other than the conductor");
    return E;
}

}  // namespace ssz::tools
