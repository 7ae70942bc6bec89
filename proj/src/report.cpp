#include "elastica/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace elastica {

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

bool EnergyReport::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

std::string EnergyReport::to_csv() const {
    std::ostringstream os;
    if (!study.empty()) {
        os << "collar,F_coarea,target,abs_error\n";
        for (const auto& r : study)
            os << format_g9(r.collar) << ',' << format_g9(r.coarea) << ','
               << format_g9(r.target) << ',' << format_g9(r.abs_error) << '\n';
        return os.str();
    }
    os << "level,t,length,curvature_term,energy\n";
    for (const auto& r : levels)
        os << r.level << ',' << format_g9(r.t) << ',' << format_g9(r.length) << ','
           << format_g9(r.curvature_term) << ',' << format_g9(r.energy) << '\n';
    os << "TOTAL,,,," << format_g9(total) << '\n';
    return os.str();
}

}  // namespace elastica
