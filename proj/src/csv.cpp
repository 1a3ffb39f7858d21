#include "qdet/csv.hpp"

#include <cstdio>
#include <sstream>

namespace qdet {

namespace {

// Quote a field if it contains a delimiter/quote/newline (RFC 4180 rules).
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string csv_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string emit_csv(const ResponseBreakdown& b) {
    std::ostringstream os;
    os << "detector,case,on_cone,r,s_i2,s_f2,probability,vacuum_part,"
          "p2_re,p2_im,p3_re,p3_im,eps_uv\n";
    os << to_string(b.detector) << ',' << to_string(b.geometry.timing) << ','
       << (b.geometry.on_cone ? 1 : 0) << ',' << csv_real(b.geometry.r) << ','
       << csv_real(b.geometry.s_i2) << ',' << csv_real(b.geometry.s_f2) << ','
       << csv_real(b.probability) << ',' << csv_real(b.vacuum_part) << ','
       << csv_real(b.amp_p2.real()) << ',' << csv_real(b.amp_p2.imag()) << ','
       << csv_real(b.amp_p3.real()) << ',' << csv_real(b.amp_p3.imag()) << ','
       << csv_real(b.epsilon_uv) << '\n';
    return os.str();
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "axis_value,probability,vacuum_part,abs_p2,abs_p3,case,on_cone,error\n";
    for (const SweepRow& r : rows) {
        os << csv_real(r.axis_value) << ',' << csv_real(r.probability) << ','
           << csv_real(r.vacuum_part) << ',' << csv_real(r.abs_p2) << ','
           << csv_real(r.abs_p3) << ',' << to_string(r.timing) << ','
           << (r.on_cone ? 1 : 0) << ',' << csv_field(r.error) << '\n';
    }
    return os.str();
}

std::string emit_csv(const DensityProfile& prof) {
    std::ostringstream os;
    os << "observable,t,r_lc,eps_uv,r,value\n";
    for (const auto& [r, v] : prof.points) {
        os << to_string(prof.observable) << ',' << csv_real(prof.t) << ','
           << csv_real(prof.r_lc) << ',' << csv_real(prof.epsilon_uv) << ','
           << csv_real(r) << ',' << csv_real(v) << '\n';
    }
    return os.str();
}

std::string emit_csv(const CausalityReport& rep) {
    std::ostringstream os;
    os << "detector,r_lc,grid_step,largest_responding_r,floor,verdict\n";
    for (const auto& v : rep.verdicts) {
        os << to_string(v.kind) << ',' << csv_real(rep.r_lc) << ','
           << csv_real(rep.grid_step) << ',' << csv_real(v.largest_responding_r)
           << ',' << csv_real(v.floor) << ',' << v.verdict << '\n';
    }
    return os.str();
}

std::string emit_csv(const std::vector<FrontScanRow>& rows) {
    std::ostringstream os;
    os << "t,re_v,im_v,mean_field,glauber_g,error\n";
    for (const auto& r : rows) {
        os << csv_real(r.t) << ',' << csv_real(r.re) << ',' << csv_real(r.im)
           << ',' << csv_real(r.mean) << ',' << csv_real(r.g) << ','
           << csv_field(r.error) << '\n';
    }
    return os.str();
}

} // namespace qdet
