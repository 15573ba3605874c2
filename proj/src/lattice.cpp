#include "lattice.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace yamabe {

CenterSet make_centers(int n, int k, double r) {
    require(n >= 3, Error::invalid_argument, "centers need dimension >= 3");
    require(k >= 1, Error::invalid_argument, "need at least one center");
    require(r > 0.0, Error::invalid_argument, "center radius must be positive");
    CenterSet cs;
    cs.n = n;
    cs.k = k;
    cs.r = r;
    cs.centers.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        double th = 2.0 * M_PI * (j - 1) / k;
        Vec p(static_cast<std::size_t>(n), 0.0);
        // O^{k,j} has +sin in the upper-right slot, so (r,0) maps to
        // (r cos th, -r sin th)
        p[0] = r * std::cos(th);
        p[1] = -r * std::sin(th);
        cs.centers.push_back(std::move(p));
    }
    return cs;
}

double CenterSet::min_separation() const {
    if (k < 2) return 2.0 * r;
    return 2.0 * r * std::sin(M_PI / k);
}

double CenterSet::dist_min(const Vec& x) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Vec& p : centers) {
        double s2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double dx = x[i] - p[i];
            s2 += dx * dx;
        }
        d = std::min(d, s2);
    }
    return std::sqrt(1.0 + d);
}

double CenterSet::weight_sum(const Vec& x, double s) const {
    require(std::isfinite(s), Error::invalid_argument, "weight exponent not finite");
    double acc = 0.0;
    for (const Vec& p : centers) {
        double s2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double dx = x[i] - p[i];
            s2 += dx * dx;
        }
        acc += std::pow(1.0 + s2, -0.5 * s);
    }
    return acc;
}

double Lattice::support_radius() const {
    return std::exp(-2.0 * std::log(static_cast<double>(k())) - ln_t);
}

namespace {

Lattice build(int n, int k, double r, double t, double ln_t, double eps, double c0,
              bool paper) {
    require(n >= 3, Error::invalid_argument, "lattice needs dimension >= 3");
    require(k >= 3, Error::invalid_argument, "lattice needs at least 3 bubbles");
    require(r >= 1.0, Error::invalid_argument, "lattice radius must be >= 1");
    require(t > 0.0 || ln_t < 0.0, Error::invalid_argument, "scale t must be positive");
    require(eps > 0.0 && eps < 1.0, Error::invalid_argument, "eps must lie in (0,1)");
    require(c0 > 0.0, Error::invalid_argument, "decay exponent c0 must be positive");
    Lattice lat;
    lat.cs = make_centers(n, k, r);
    lat.t = t;
    lat.ln_t = ln_t;
    lat.eps = eps;
    lat.c0 = c0;
    lat.paper_regime = paper;
    return lat;
}

}  // namespace

Lattice make_lattice(int n, int k, double r, double t, double eps, double c0) {
    require(t > 0.0, Error::invalid_argument, "scale t must be positive");
    return build(n, k, r, t, std::log(t), eps, c0, false);
}

Lattice make_lattice_paper(int n, int k, double eps, double c0) {
    // t = e^{-k} and r = (t k)^{-1} = e^k / k, with ln t exact
    double t = std::exp(-static_cast<double>(k));
    double r = std::exp(static_cast<double>(k)) / k;
    return build(n, k, r, t, -static_cast<double>(k), eps, c0, true);
}

std::string Lattice::config_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "n = " << n() << "\n";
    os << "k = " << k() << "\n";
    if (paper_regime) {
        os << "r = paper(" << k() << ")\n";
        os << "t = paper(" << k() << ")\n";
    } else {
        os << "r = " << r() << "\n";
        os << "t = " << t << "\n";
    }
    os << "eps = " << eps << "\n";
    os << "c0 = " << c0 << "\n";
    return os.str();
}

void Lattice::centers_csv(std::ostream& os) const {
    os.precision(17);
    os << "j";
    for (int i = 1; i <= n(); ++i) os << ",x" << i;
    os << "\n";
    for (int j = 0; j < k(); ++j) {
        os << (j + 1);
        for (int i = 0; i < n(); ++i) os << "," << centers()[j][i];
        os << "\n";
    }
}

Lattice lattice_from_config(const std::string& text) {
    int n = 0, k = 0;
    double r = -1, t = -1, eps = -1, c0 = -1;
    bool r_paper = false, t_paper = false;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto pos = line.find('=');
        if (pos == std::string::npos) continue;
        std::string key = line.substr(0, pos);
        std::string val = line.substr(pos + 1);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            auto e = s.find_last_not_of(" \t\r");
            if (e != std::string::npos) s.erase(e + 1);
            return s;
        };
        key = trim(key);
        val = trim(val);
        auto parse_num = [&](const char* name) {
            try {
                return std::stod(val);
            } catch (...) {
                fail(Error::parse, std::string("bad value for field '") + name + "': " + val);
            }
        };
        if (key == "n") n = static_cast<int>(parse_num("n"));
        else if (key == "k") k = static_cast<int>(parse_num("k"));
        else if (key == "r") {
            if (val.rfind("paper", 0) == 0) r_paper = true;
            else r = parse_num("r");
        } else if (key == "t") {
            if (val.rfind("paper", 0) == 0) t_paper = true;
            else t = parse_num("t");
        } else if (key == "eps") eps = parse_num("eps");
        else if (key == "c0") c0 = parse_num("c0");
    }
    require(n > 0, Error::parse, "lattice config missing field 'n'");
    require(k > 0, Error::parse, "lattice config missing field 'k'");
    require(eps > 0, Error::parse, "lattice config missing field 'eps'");
    require(c0 > 0, Error::parse, "lattice config missing field 'c0'");
    if (r_paper || t_paper) {
        require(r_paper && t_paper, Error::parse,
                "paper(k) must be used for both r and t");
        return make_lattice_paper(n, k, eps, c0);
    }
    require(r > 0, Error::parse, "lattice config missing field 'r'");
    require(t > 0, Error::parse, "lattice config missing field 't'");
    return make_lattice(n, k, r, t, eps, c0);
}

}  // namespace yamabe
