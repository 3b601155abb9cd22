#include "adsgeo/scan.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ads {

std::vector<double> bracket_roots(const std::function<double(double)>& f, const std::vector<double>& xs,
                                  const ToleranceConfig& cfg) {
  std::vector<double> out;
  if (xs.size() < 2) return out;
  std::vector<double> v(xs.size());
  std::vector<bool> ok(xs.size(), true);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      v[i] = f(xs[i]);
      ok[i] = std::isfinite(v[i]);
    } catch (const AdsError&) {
      ok[i] = false;
    }
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!ok[i] || !ok[i + 1]) continue;
    if (v[i] == 0) {
      out.push_back(xs[i]);
      continue;
    }
    if (v[i + 1] == 0 || (v[i] > 0) == (v[i + 1] > 0)) continue;
    double a = xs[i], b = xs[i + 1], fa = v[i];
    try {
      while (b - a > cfg.bisection_tol * std::max(1.0, std::abs(a))) {
        double m = 0.5 * (a + b), fm = f(m);
        if (fm == 0) {
          a = b = m;
          break;
        }
        if ((fm > 0) == (fa > 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      out.push_back(0.5 * (a + b));
    } catch (const AdsError&) {
    }
  }
  return out;
}

namespace {

std::vector<double> samples(Interval d, int n) {
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(d.first + (d.second - d.first) * i / (n - 1));
  return xs;
}

}  // namespace

ScanResult scan_ads4_curve(const CurveSource& c, int n_s, int n_generic, unsigned seed,
                           const ToleranceConfig& cfg) {
  if (n_s < 2) throw GridError("scan needs at least 2 samples");
  ScanResult out;
  auto xs = samples(c.domain(), n_s);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  auto add = [&](double s, double th, int br, const char* origin) {
    try {
      out.points.push_back({{s, 0}, th, br, origin, classify_focal_point_ads4_curve(c, s, th, cfg)});
    } catch (const NoFocalPointError&) {
    }
  };
  for (double s : xs) {
    for (int k = 0; k < n_generic; ++k) add(s, ang(rng), 0, "generic");
    auto j = curve_jets_ads4(c, s, cfg);
    for (int br : {1, -1}) {
      double th;
      if (rho_root_on_branch(j, br, th)) add(s, th, br, "rho-root");
    }
  }
  for (int br : {1, -1}) {
    auto sig = [&](double s) {
      auto j = curve_jets_ads4(c, s, cfg);
      double th;
      if (!rho_root_on_branch(j, br, th)) throw FrameUndefinedError("no rho root");
      SigmaJet sj = sigma_jet_ads4(j, br);
      if (!sj.defined) throw SigmaUndefinedError("sigma undefined");
      return sj.sigma.value();
    };
    for (double s : bracket_roots(sig, xs, cfg)) {
      double th;
      if (rho_root_on_branch(curve_jets_ads4(c, s, cfg), br, th)) add(s, th, br, "sigma-root");
    }
  }
  return out;
}

ScanResult scan_ads3_curve(const CurveSource& c, int n_s, const ToleranceConfig& cfg) {
  if (n_s < 2) throw GridError("scan needs at least 2 samples");
  ScanResult out;
  auto xs = samples(c.domain(), n_s);
  for (int br : {1, -1}) {
    auto sig = [&](double s) {
      auto j = curve_jets_ads3(c, s, cfg);
      return br > 0 ? j.sigma_plus.value() : j.sigma_minus.value();
    };
    double peak = 0, scale = 0;
    for (double s : xs) {
      auto j = curve_jets_ads3(c, s, cfg);
      peak = std::max(peak, std::abs(br > 0 ? j.sigma_plus.value() : j.sigma_minus.value()));
      scale = std::max({scale, std::abs(j.kappa.d(1)), std::abs(j.kappa.value() * j.tau.value())});
    }
    const char* name = br > 0 ? "σ+" : "σ-";
    if (peak <= cfg.zero_detect_tol * std::max(1.0, scale)) {
      out.degenerate_family = true;
      out.notes.push_back(std::string(name) + " identically 0 (degenerate family)");
    }
    for (double s : xs) {
      try {
        out.points.push_back({{s, 0}, static_cast<double>(br), br, "generic",
                              classify_evolute_point_ads3(c, s, br, cfg)});
      } catch (const NoFocalPointError&) {
      }
    }
    if (peak <= cfg.zero_detect_tol * std::max(1.0, scale)) continue;
    for (double s : bracket_roots(sig, xs, cfg)) {
      out.points.push_back({{s, 0}, static_cast<double>(br), br, "sigma-root",
                            classify_evolute_point_ads3(c, s, br, cfg)});
    }
  }
  if (out.notes.size() == 2) out.notes = {"σ± identically 0 (degenerate family)"};
  return out;
}

ScanResult scan_surface(const ParamSurface& s, int n, const ToleranceConfig& cfg) {
  if (n < 2) throw GridError("scan needs at least 2 samples per axis");
  ScanResult out;
  auto us = samples(s.domain_u(), n), vs = samples(s.domain_v(), n);
  for (int sg : {1, -1})
    for (int br = 0; br < 2; ++br) {
      for (double u : us)
        for (double v : vs) {
          try {
            out.points.push_back({{u, v}, static_cast<double>(sg), br, "generic",
                                  classify_surface_focal_point(s, u, v, sg, br, cfg)});
          } catch (const AdsError&) {
          }
        }
      // ridge crossings along u-lines at each v
      for (double v : vs)
        for (std::size_t i = 0; i + 1 < us.size(); ++i) {
          BaseParams q;
          try {
            if (!ridge_crossing(s, {us[i], v}, {us[i + 1], v}, sg, br, q, cfg)) continue;
            out.points.push_back({q, static_cast<double>(sg), br, "ridge",
                                  classify_surface_focal_point(s, q[0], q[1], sg, br, cfg)});
          } catch (const AdsError&) {
          }
        }
    }
  return out;
}

}  // namespace ads
