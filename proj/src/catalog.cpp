#include "qes/catalog.hpp"

#include <cmath>

namespace qes {

namespace {

double get(const std::map<std::string, double>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end())
    throw Error(ErrorKind::InvalidInput, "missing parameter '" + key + "'");
  return it->second;
}

void check_params(const CaseInstance& c) {
  for (const auto& [k, v] : c.params) {
    bool known = false;
    for (const auto& name : c.param_names) known = known || name == k;
    if (!known)
      throw Error(ErrorKind::InvalidInput,
                  "unknown parameter '" + k + "' for case " + c.id);
    (void)v;
  }
}

double sq(double x) { return x * x; }

// ---------------------------------------------------------------- Morse I
CaseInstance case_morse1(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "morse1";
  c.name = "Morse-type potential I";
  c.param_names = {"a", "b", "c", "alpha"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), b = get(P, "b"), cc = get(P, "c"), al = get(P, "alpha");
  if (al <= 0) throw Error(ErrorKind::InvalidInput, "alpha must be positive");
  if (a == 0) throw Error(ErrorKind::InvalidInput, "a must be nonzero");
  c.n = n;
  c.form.n = n;
  c.form.a = {0, 0, al * al, 0, 0};
  c.form.b = {2 * cc * al, al * (2 * b + al), -2 * a * al, 0};
  c.form.v1 = {2 * a * cc - b * b, -2 * n * a * al, 0};
  c.potential_tex =
      "a^2 e^{-2ax} - a[2b+a(2n+1)] e^{-ax} + c(2b-a) e^{ax} + c^2 e^{2ax}";
  c.domain_text = "x in R; z = exp(-alpha x) in (0, inf)";
  c.z_of_x = [al](double x) { return std::exp(-al * x); };
  c.x_of_z = [al](double z) { return -std::log(z) / al; };
  c.dzdx = [al](double x) { return -al * std::exp(-al * x); };
  c.d2zdx2 = [al](double x) { return al * al * std::exp(-al * x); };
  c.rho_coeff = 1.0;
  c.rho_power = 0;
  c.gauge_G = [=](double z) {
    return a / al * z - b / al * std::log(z) + cc / (al * z);
  };
  c.gauge_K = [=](double z) { return a / al - b / (al * z) - cc / (al * z * z); };
  c.V_x = [=](double x) {
    double u = std::exp(-al * x), w = std::exp(al * x);
    return a * a * u * u - a * (2 * b + al * (2 * n + 1)) * u +
           cc * (2 * b - al) * w + cc * cc * w * w;
  };
  c.x_lo = -3;
  c.x_hi = 3;
  c.z_lo = 0.2;
  c.z_hi = 3;
  double disc = 16 * a * cc + sq(2 * b + al);
  if (n == 1 && disc >= 0) {
    double S = std::sqrt(disc);
    double E0 = -b * b + 2 * a * cc - al * b;
    OracleN1 o;
    o.root_seed = (2 * b + al - S) / (4 * a);
    o.root_other = (2 * b + al + S) / (4 * a);
    o.energy_seed = E0 - al / 2 * (al + S);
    o.energy_other = E0 - al / 2 * (al - S);
    o.phi2 = [=](double z) { return 2 * al * z * S / (4 * a * z - 2 * b - al + S); };
    o.V2_z = [=](double z) {
      double den = 2 * b - 4 * a * z + al - S;
      return -b * b + 2 * a * cc + 2 * al * cc / z +
             32 * sq(a * al * z) / sq(den) + 8 * a * al * al * z / den;
    };
    o.psi2_x = [=](double x) {
      double u = std::exp(-al * x);
      return al * u * S / (2 * (a * u - (al + 2 * b - S) / 4)) *
             std::exp(-a / al * u - b * x - cc / al / u);
    };
    o.V2_x = [=](double x) {
      double u = std::exp(-al * x), w = 1 / u;
      double den = 2 * b - 4 * a * u + al - S;
      return a * a * u * u - a * (2 * b + al) * u + cc * (2 * b + al) * w +
             cc * cc * w * w + 32 * sq(al * a * u) / sq(den) +
             8 * al * al * a * u / den;
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- Morse II
CaseInstance case_morse2(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "morse2";
  c.name = "Morse-type potential II";
  c.param_names = {"a", "b", "d", "alpha"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), b = get(P, "b"), d = get(P, "d"), al = get(P, "alpha");
  if (al <= 0) throw Error(ErrorKind::InvalidInput, "alpha must be positive");
  if (d == 0) throw Error(ErrorKind::InvalidInput, "d must be nonzero");
  c.n = n;
  c.form.n = n;
  c.form.a = {0, al, 0, 0, 0};
  c.form.b = {2 * b + al, -2 * a, -2 * d, 0};
  c.form.v1 = {0, -2.0 * n * d, 0};
  c.potential_tex =
      "d^2 e^{-4ax} + 2ad e^{-3ax} + [a^2-2d(b+a+na)] e^{-2ax} - a(2b+a) e^{-ax} + b^2";
  c.domain_text = "x in R; z = exp(-alpha x) in (0, inf); rho = 1/(alpha z)";
  c.z_of_x = [al](double x) { return std::exp(-al * x); };
  c.x_of_z = [al](double z) { return -std::log(z) / al; };
  c.dzdx = [al](double x) { return -al * std::exp(-al * x); };
  c.d2zdx2 = [al](double x) { return al * al * std::exp(-al * x); };
  c.rho_coeff = 1.0 / al;
  c.rho_power = -1;
  c.gauge_G = [=](double z) {
    return d / (2 * al) * z * z + a / al * z - b / al * std::log(z);
  };
  c.gauge_K = [=](double z) { return d * z / al + a / al - b / (al * z); };
  c.V_x = [=](double x) {
    double u = std::exp(-al * x);
    return sq(d * u * u) + 2 * a * d * u * u * u +
           (a * a - 2 * d * (b + al + n * al)) * u * u - a * (2 * b + al) * u +
           b * b;
  };
  c.x_lo = -2;
  c.x_hi = 4;
  c.z_lo = 0.2;
  c.z_hi = 3;
  double disc = a * a + 2 * d * (2 * b + al);
  if (n == 1 && disc >= 0) {
    double S = std::sqrt(disc);
    OracleN1 o;
    o.root_seed = -(a + S) / (2 * d);
    o.root_other = -(a - S) / (2 * d);
    o.energy_seed = a - S;
    o.energy_other = a + S;
    o.phi2 = [=](double z) { return 2 * std::sqrt(al * z) * S / (2 * d * z + a + S); };
    o.V2_z = [=](double z) {
      double den = a + 2 * d * z + S;
      return a + b / z + d * z + al / (4 * z) + 8 * d * d * al * z / sq(den) -
             2 * d * al / den;
    };
    o.psi2_x = [=](double x) {
      double u = std::exp(-al * x);
      return 2 * std::sqrt(al * u) * S / (a + 2 * d * u + S) *
             std::exp(-d / (2 * al) * u * u - a / al * u - b * x);
    };
    o.V2_x = [=](double x) {
      double u = std::exp(-al * x);
      double den = 2 * d * u + a + S;
      return sq(d * u * u) + 2 * a * d * u * u * u +
             (a * a - 2 * b * d - d * al) * u * u - 2 * a * b * u +
             sq(2 * b + al) / 4 + 8 * sq(d * al * u) / sq(den) -
             2 * d * al * al * u / den;
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- Morse III
CaseInstance case_morse3(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "morse3";
  c.name = "Morse-type potential III";
  c.param_names = {"a", "b", "d", "alpha"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), b = get(P, "b"), d = get(P, "d"), al = get(P, "alpha");
  if (al <= 0) throw Error(ErrorKind::InvalidInput, "alpha must be positive");
  if (2 * b - al == 0)
    throw Error(ErrorKind::InvalidInput, "2b - alpha must be nonzero");
  c.n = n;
  c.form.n = n;
  c.form.a = {0, 0, 0, al, 0};
  c.form.b = {2 * d, 2 * a, al - 2 * b, 0};
  c.form.v1 = {0, -double(n) * (2 * b - n * al), 0};
  c.potential_tex =
      "d^2 e^{4ax} + 2ad e^{3ax} + [a^2-2d(a+b)] e^{2ax} - a(2b+a) e^{ax} + b^2 + an(an-2b)";
  c.domain_text = "x in R; z = exp(-alpha x) in (0, inf); rho = z/alpha";
  c.z_of_x = [al](double x) { return std::exp(-al * x); };
  c.x_of_z = [al](double z) { return -std::log(z) / al; };
  c.dzdx = [al](double x) { return -al * std::exp(-al * x); };
  c.d2zdx2 = [al](double x) { return al * al * std::exp(-al * x); };
  c.rho_coeff = 1.0 / al;
  c.rho_power = 1;
  c.gauge_G = [=](double z) {
    return d / (2 * al * z * z) + a / (al * z) + b / al * std::log(z);
  };
  c.gauge_K = [=](double z) {
    return -d / (al * z * z * z) - a / (al * z * z) + b / (al * z);
  };
  c.V_x = [=](double x) {
    double w = std::exp(al * x);
    return sq(d * w * w) + 2 * a * d * w * w * w +
           (a * a - 2 * d * (al + b)) * w * w - a * (2 * b + al) * w + b * b +
           al * n * (al * n - 2 * b);
  };
  c.x_lo = -4;
  c.x_hi = 2;
  c.z_lo = 0.2;
  c.z_hi = 3;
  double disc = a * a + 4 * b * d - 2 * d * al;
  if (n == 1 && disc >= 0) {
    double S = std::sqrt(disc);
    double z1 = (a - S) / (2 * b - al);
    OracleN1 o;
    o.root_seed = z1;
    o.root_other = (a + S) / (2 * b - al);
    o.energy_seed = -a - S;
    o.energy_other = -a + S;
    o.phi2 = [=](double z) {
      return 2 * std::pow(z, 1.5) * std::sqrt(al) * S / ((2 * b - al) * z - a + S);
    };
    o.V2_z = [=](double z) {
      return a + 3 * d / z + (5 * al / 4 - b) * z - 3 * al * z * z / (z - z1) +
             2 * al * z * z * z / sq(z - z1);
    };
    o.psi2_x = [=](double x) {
      double w = std::exp(al * x);
      return 2 * std::exp(-al * x / 2) * std::sqrt(al) * S /
             (2 * b - al + w * (S - a)) *
             std::exp(-a / al * w - d / (2 * al) * w * w + b * x);
    };
    o.V2_x = [=](double x) {
      // log-derivative closed form: V2 = E2 alpha/z + u'' + u'^2, u = ln psi2
      double z = std::exp(-al * x);
      double Gp = -d / (al * z * z * z) - a / (al * z * z) + b / (al * z);
      double Gpp = 3 * d / (al * sq(z * z)) + 2 * a / (al * z * z * z) -
                   b / (al * z * z);
      double F = 3 / (2 * z) - Gp - 1 / (z - z1);
      double Fp = -3 / (2 * z * z) - Gpp + 1 / sq(z - z1);
      double up = -al * z * F;
      double upp = al * al * z * F + al * al * z * z * Fp;
      return (-a + S) * al / z + upp + up * up;
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- PT IV
CaseInstance case_pt4(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "pt4";
  c.name = "Poschl-Teller-type potential IV";
  c.param_names = {"a", "c", "alpha", "p"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), cc = get(P, "c"), al = get(P, "alpha"), p = get(P, "p");
  if (al <= 0) throw Error(ErrorKind::InvalidInput, "alpha must be positive");
  if (p != 0 && p != 1) throw Error(ErrorKind::InvalidInput, "p must be 0 or 1");
  c.n = n;
  c.form.n = n;
  c.form.a = {0, 0, 4 * al, -4 * al, 0};
  c.form.b = {4 * cc, 4 * a - 4 * cc + 4 * al, -(4 * a + 2 * al * (3 + 2 * p)), 0};
  c.form.v1 = {2 * cc * p, -2 * n * (2 * a + al * (1 + 2 * n + 2 * p)), 0};
  c.potential_tex =
      "c^2 cosh^4(ax) - c(c+2a-2a) cosh^2(ax) - {a^2+aa+a(2n+p)[a(2n+p+1)+2a]} sech^2(ax) + a^2+ca-2ac";
  c.domain_text = "x in R; z = sech^2(alpha x) in (0, 1]; rho = 1/alpha";
  c.z_of_x = [al](double x) { return 1.0 / sq(std::cosh(al * x)); };
  c.x_of_z = [al](double z) { return std::acosh(1.0 / std::sqrt(z)) / al; };
  c.dzdx = [al](double x) {
    double ch = std::cosh(al * x);
    return -2 * al * std::sinh(al * x) / (ch * ch * ch);
  };
  c.d2zdx2 = [al](double x) {
    double ch = std::cosh(al * x), sh = std::sinh(al * x);
    return -2 * al * al * (ch * ch - 3 * sh * sh) / sq(ch * ch);
  };
  c.rho_coeff = 1.0 / al;
  c.rho_power = 0;
  c.gauge_G = [=](double z) {
    return cc / (2 * al * z) - a / (2 * al) * std::log(z) -
           p / 2 * std::log(2 * (1 - z));
  };
  c.gauge_K = [=](double z) {
    return -cc / (2 * al * z * z) - a / (2 * al * z) + p / (2 * (1 - z));
  };
  c.V_x = [=](double x) {
    double z = 1.0 / sq(std::cosh(al * x));
    return cc * cc / (z * z) - cc * (cc + 2 * al - 2 * a) / z -
           (a * a + a * al +
            al * (2 * n + p) * (al * (2 * n + p + 1) + 2 * a)) * z +
           a * a + cc * al - 2 * a * cc;
  };
  c.x_lo = -3;
  c.x_hi = 3;
  c.z_lo = 0.05;
  c.z_hi = 0.95;
  double M = 2 * a + (3 + 2 * p) * al;
  double disc = sq(a + cc) + 2 * (a + 2 * cc * (1 + p)) * al + al * al;
  if (n == 1 && disc >= 0 && M != 0) {
    double D = std::sqrt(disc);
    OracleN1 o;
    o.root_seed = (a - cc + al - D) / M;
    o.root_other = (a - cc + al + D) / M;
    o.energy_seed = -2 * (a - cc * (1 + p) + al + D);
    o.energy_other = -2 * (a - cc * (1 + p) + al - D);
    o.phi2 = [=](double z) {
      return 4 * z * std::sqrt(al * (1 - z)) * D / (M * z - a + cc - al + D);
    };
    double z1 = o.root_seed;
    double E2 = o.energy_other;
    o.V2_z = [=](double z) {
      // log-derivative closed form: V2 = E2 + P4 (v' + v^2) + P3 v
      double P4 = 4 * al * z * z * (1 - z);
      double P3 = -(4 * a + 2 * al * (3 + 2 * p)) * z * z +
                  (4 * a - 4 * cc + 4 * al) * z + 4 * cc;
      double v = (2 - 3 * z) / (2 * z * (1 - z)) - 1 / (z - z1);
      double vp = -(3 * z * z - 4 * z + 2) / (2 * z * z * sq(1 - z)) + 1 / sq(z - z1);
      return E2 + P4 * (vp + v * v) + P3 * v;
    };
    o.psi2_x = [=](double x) {
      double C2 = sq(std::cosh(al * x)), t = std::tanh(al * x);
      return 4 * std::sqrt(al) * D * t / (M + (cc - a - al + D) * C2) *
             std::exp(-cc / (2 * al) * C2 + a / (2 * al) * std::log(1 / C2) +
                      p / 2 * std::log(2 * t * t));
    };
    o.V2_x = [=](double x) {
      double C2 = sq(std::cosh(al * x)), t2 = sq(std::tanh(al * x));
      double sh2 = sq(std::sinh(al * x));
      double den = cc - a - al + D + M / C2;
      double ps = p > 0 ? p * (1 + p) * al * al / sh2 : 0.0;
      return cc * (a + al) * std::cosh(2 * al * x) +
             cc * cc / 8 * std::cosh(4 * al * x) + ps -
             (a * a + al * a * (3 + 2 * p) + (6 + p * (p + 3)) * al * al) / C2 +
             a * a - a * cc - cc * cc / 8 +
             8 * al * al * M * M / sq(C2) * t2 / sq(den) -
             4 * al * al * M * (std::cosh(2 * al * x) - 2) / sq(C2) / den;
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- PT V
CaseInstance case_pt5(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "pt5";
  c.name = "Poschl-Teller-type potential V";
  c.param_names = {"a", "b", "alpha", "p"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), b = get(P, "b"), al = get(P, "alpha"), p = get(P, "p");
  if (al <= 0) throw Error(ErrorKind::InvalidInput, "alpha must be positive");
  if (p != 0 && p != 1) throw Error(ErrorKind::InvalidInput, "p must be 0 or 1");
  if (b == 0) throw Error(ErrorKind::InvalidInput, "b must be nonzero");
  c.n = n;
  c.form.n = n;
  c.form.a = {0, 4 * al, -4 * al, 0, 0};
  c.form.b = {4 * a + 8 * b + 4 * al * p, -(4 * a + 4 * b + 2 * al * (2 * p + 1)),
              -4 * b, 0};
  c.form.v1 = {-double(n) * (2 * a + 2 * b + al * (2 * n + 2 * p + 1)),
               -4.0 * b * n, 0};
  c.potential_tex =
      "-b^2 sech^6(ax) - b(2a+3b+a+4na+2pa) sech^4(ax) - [...] sech^2(ax) + [a+2b+a(p-1)]^2";
  c.domain_text = "x in R; z = sech^2(alpha x) in (0, 1]; rho = 1/(alpha z)";
  c.z_of_x = [al](double x) { return 1.0 / sq(std::cosh(al * x)); };
  c.x_of_z = [al](double z) { return std::acosh(1.0 / std::sqrt(z)) / al; };
  c.dzdx = [al](double x) {
    double ch = std::cosh(al * x);
    return -2 * al * std::sinh(al * x) / (ch * ch * ch);
  };
  c.d2zdx2 = [al](double x) {
    double ch = std::cosh(al * x), sh = std::sinh(al * x);
    return -2 * al * al * (ch * ch - 3 * sh * sh) / sq(ch * ch);
  };
  c.rho_coeff = 1.0 / al;
  c.rho_power = -1;
  double A = (a + 2 * b + al * (p - 1)) / (2 * al);
  double B = b / (2 * al);
  c.gauge_G = [=](double z) { return -A * std::log(z) - B * z; };
  c.gauge_K = [=](double z) { return -A / z - B; };
  c.V_x = [=](double x) {
    double z = 1.0 / sq(std::cosh(al * x));
    return -b * b * z * z * z -
           b * (2 * a + 3 * b + al + 4 * n * al + 2 * p * al) * z * z -
           (a * a + 2 * a * b + a * al * (2 * p + 2 * n - 1) +
            al * (2 * b * (n + p - 1) +
                  al * (n + 2.0 * n * n + 2.0 * n * p + (p - 1) * p))) * z +
           sq(a + 2 * b + al * (p - 1));
  };
  c.x_lo = -3;
  c.x_hi = 3;
  c.z_lo = 0.05;
  c.z_hi = 0.95;
  double disc = 4 * sq(a + 3 * b) + 4 * al * (3 * a + 7 * b) + 9 * al * al;
  if (n == 1 && p == 1 && disc >= 0) {
    double D = std::sqrt(disc);
    double z1 = -(2 * (a + b) + 3 * al + D) / (4 * b);
    OracleN1 o;
    o.root_seed = z1;
    o.root_other = -(2 * (a + b) + 3 * al - D) / (4 * b);
    o.energy_seed = -2 * al - D;
    o.energy_other = -2 * al + D;
    o.phi2 = [=](double z) {
      return 4 * std::sqrt(al * (z - z * z)) * D /
             (4 * b * z + 2 * (a + b) + 3 * al + D);
    };
    o.V2_z = [=](double z) {
      return 2 * a + 4 * b - 3 * al - (2 * a + 4 * b + al) * (2 * z - 1) / z +
             16 * b * al * (2 * z - 1) / (4 * b * z + 2 * (a + b) + 3 * al + D) -
             8 * al * z * (z - 1) / sq(z - z1);
    };
    o.psi2_x = [=](double x) {
      double C = std::cosh(al * x);
      return 4 * std::pow(C, -(1 + (a + 2 * b) / al)) * std::tanh(al * x) *
             std::sqrt(al) * D /
             (2 * (a + b) + 3 * al + 4 * b / sq(C) + D) *
             std::exp(b / (al * (std::cosh(2 * al * x) + 1)));
    };
    o.V2_x = [=](double x) {
      double C2 = sq(std::cosh(al * x)), t2 = sq(std::tanh(al * x));
      double den = 4 * b / C2 + 2 * a + 2 * b + 3 * al + D;
      return -b * b / (C2 * C2 * C2) - b * (2 * a + 3 * b + 3 * al) / sq(C2) -
             (a * a + 2 * a * b + 3 * a * al + 4 * b * al + 5 * al * al) / C2 +
             sq(a + 2 * b + al) + 128 * b * b * al * al / sq(C2) * t2 / sq(den) -
             8 * b * al * al * (std::cosh(2 * al * x) - 3) / sq(C2) / den;
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- Sextic VI
CaseInstance case_sextic6(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "sextic6";
  c.name = "Sextic potential VI";
  c.param_names = {"a", "b"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), b = get(P, "b");
  if (a == 0) throw Error(ErrorKind::InvalidInput, "a must be nonzero");
  c.n = n;
  c.form.n = n;
  c.form.a = {0, 4, 0, 0, 0};
  c.form.b = {2, -4 * b, -4 * a, 0};
  c.form.v1 = {b, -4.0 * a * n, 0};
  c.potential_tex = "a^2 x^6 + 2ab x^4 + [b^2 - a(4n+3)] x^2";
  c.domain_text = "x in R; z = x^2 in [0, inf)";
  c.z_of_x = [](double x) { return x * x; };
  c.x_of_z = [](double z) { return std::sqrt(z); };
  c.dzdx = [](double x) { return 2 * x; };
  c.d2zdx2 = [](double) { return 2.0; };
  c.rho_coeff = 1.0;
  c.rho_power = 0;
  c.gauge_G = [=](double z) { return a / 4 * z * z + b / 2 * z; };
  c.gauge_K = [=](double z) { return a * z / 2 + b / 2; };
  c.V_x = [=](double x) {
    double x2 = x * x;
    return sq(a * x2) * x2 + 2 * a * b * x2 * x2 + (b * b - a * (4 * n + 3)) * x2;
  };
  c.x_lo = -2;
  c.x_hi = 2;
  c.z_lo = 0.2;
  c.z_hi = 4;
  double disc = 2 * a + b * b;
  if (n == 1 && disc > 0) {
    double S = std::sqrt(disc);
    OracleN1 o;
    o.root_seed = 1 / (b - S);
    o.root_other = 1 / (b + S);
    o.energy_seed = 3 * b - 2 * S;
    o.energy_other = 3 * b + 2 * S;
    double z1 = o.root_seed;
    o.phi2 = [=](double z) {
      return 2 * std::sqrt(z) * S * (b - S) / (a * ((b - S) * z - 1));
    };
    o.V2_z = [=](double z) {
      return 3 * b + 2 * a * z + 4 * (z + z1) / sq(z - z1);
    };
    o.psi2_x = [=](double x) {
      double x2 = x * x;
      return 4 * x * S / (2 * a * x2 + b + S) *
             std::exp(-a * x2 * x2 / 4 - b * x2 / 2);
    };
    o.V2_x = [=](double x) {
      // log-derivative closed form: V2 = E2 + u'' + u'^2, u = ln psi2
      double x2 = x * x;
      double D = 1 - (b - S) * x2;
      double up = 1 / x - a * x2 * x - b * x + 2 * (b - S) * x / D;
      double upp = -1 / x2 - 3 * a * x2 - b + 2 * (b - S) / D +
                   4 * sq(b - S) * x2 / sq(D);
      return 3 * b + 2 * S + upp + up * up;
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- Sextic VII
CaseInstance case_sextic7(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "sextic7";
  c.name = "Sextic potential VII (radial)";
  c.param_names = {"a", "b", "c", "l", "d"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), b = get(P, "b"), cc = get(P, "c"), l = get(P, "l"),
         d = get(P, "d");
  if (a == 0) throw Error(ErrorKind::InvalidInput, "a must be nonzero");
  if (d < 1) throw Error(ErrorKind::InvalidInput, "d must be >= 1");
  c.n = n;
  c.form.n = n;
  c.form.a = {0, 4, 0, 0, 0};
  c.form.b = {2 * (d + 2 * l - 2 * cc), -4 * b, -4 * a, 0};
  c.form.v1 = {-b * (2 * cc - d - 2 * l), -4.0 * a * n, 0};
  c.potential_tex =
      "a^2 r^6 + 2ab r^4 + [b^2 - a(4n+2l+d-2c+2)] r^2 + [c(c-2l-d+2)+2l(l+d-2)]/r^2";
  c.domain_text = "r > 0; z = r^2 in (0, inf); radial (d, l)";
  c.radial = RadialData{d, l};
  c.z_of_x = [](double x) { return x * x; };
  c.x_of_z = [](double z) { return std::sqrt(z); };
  c.dzdx = [](double x) { return 2 * x; };
  c.d2zdx2 = [](double) { return 2.0; };
  c.rho_coeff = 1.0;
  c.rho_power = 0;
  double g = (2 * (cc - l) - d + 1) / 4;
  c.gauge_G = [=](double z) {
    return a / 4 * z * z + b / 2 * z + g * std::log(z);
  };
  c.gauge_K = [=](double z) { return a * z / 2 + b / 2 + g / z; };
  c.VS_x = [=](double r) {
    double r2 = r * r;
    return sq(a * r2) * r2 + 2 * a * b * r2 * r2 +
           (b * b - a * (4 * n + 2 * l + d - 2 * cc + 2)) * r2 +
           (cc * (cc - 2 * l - d + 2) + 2 * l * (l + d - 2)) / r2;
  };
  c.V_x = [c](double r) { return c.VS_x(r) + c.radial_N() / (4 * r * r); };
  c.x_lo = 0.1;
  c.x_hi = 3;
  c.z_lo = 0.2;
  c.z_hi = 4;
  double disc = b * b + 2 * a * (2 * l - 2 * cc + d);
  if (n == 1 && disc >= 0) {
    double S = std::sqrt(disc);
    OracleN1 o;
    o.root_seed = -(b + S) / (2 * a);
    o.root_other = -(b - S) / (2 * a);
    o.energy_seed = b * (2 - 2 * cc + 2 * l + d) - 2 * S;
    o.energy_other = b * (2 - 2 * cc + 2 * l + d) + 2 * S;
    o.phi2 = [=](double z) { return 4 * std::sqrt(z) * S / (2 * a * z + b + S); };
    o.V2_z = [=](double z) {
      double den = 2 * a * z + b + S;
      return b * (2 - 2 * cc + 2 * l + d) + (2 * l + d - 2 * cc - 1) / z -
             8 * a / den + 2 * a * z * (1 + 16 * a / sq(den));
    };
    o.psi2_x = [=](double r) {
      double r2 = r * r;
      return 4 * S / (2 * a * r2 + b + S) *
             std::exp(-r2 * (a * r2 + 2 * b) / 4 +
                      (2 * (l - cc) + d + 1) / 2 * std::log(r));
    };
    o.V2_x = [=](double r) {
      double r2 = r * r, den = 2 * a * r2 + b + S;
      return sq(a * r2) * r2 + 2 * a * b * r2 * r2 +
             (b * b + a * (2 * cc - d - 2 * l)) * r2 + 2 * b +
             32 * a * a * r2 / sq(den) +
             (sq(2 * l - 2 * cc + d) - 1) / (4 * r2) - 8 * a / den;
    };
    o.VS2_x = [=](double r) {
      double r2 = r * r, den = 2 * a * r2 + b + S;
      return sq(a * r2) * r2 + 2 * a * b * r2 * r2 +
             (b * b + a * (2 * cc - d - 2 * l)) * r2 + 2 * b +
             32 * a * a * r2 / sq(den) - 8 * a / den +
             ((cc - d + 1) * (cc - 2 * l - 1) + 2 * l * l) / r2;
    };
    o.psiS2_x = [=](double r) {
      double r2 = r * r;
      return 4 * r * S / (2 * a * r2 + b + S) *
             std::exp(-(2 * b + a * r2) * r2 / 4 + (l - cc) * std::log(r));
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- Coulomb VIII
CaseInstance case_coulomb8(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "coulomb8";
  c.name = "Coulomb-type potential VIII (radial)";
  c.param_names = {"a", "b", "c", "l", "d"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), b = get(P, "b"), cc = get(P, "c"), l = get(P, "l"),
         d = get(P, "d");
  if (a == 0) throw Error(ErrorKind::InvalidInput, "a must be nonzero");
  if (d < 1) throw Error(ErrorKind::InvalidInput, "d must be >= 1");
  c.n = n;
  c.form.n = n;
  c.form.a = {0, 1, 0, 0, 0};
  c.form.b = {d + 2 * l - 2 * cc - 1, -2 * b, -2 * a, 0};
  c.form.v1 = {0, -2.0 * a * n, 0};
  double Dc = d + 2 * l - 2 * cc;
  c.potential_tex =
      "a^2 r^2 + 2ab r - b(Dc-1)/r + [c(c-2l-d+2)+2l(d+l-2)]/r^2 + b^2 - a(Dc+2n)";
  c.domain_text = "r > 0; z = r in (0, inf); rho = r; radial (d, l)";
  c.radial = RadialData{d, l};
  c.z_of_x = [](double x) { return x; };
  c.x_of_z = [](double z) { return z; };
  c.dzdx = [](double) { return 1.0; };
  c.d2zdx2 = [](double) { return 0.0; };
  c.rho_coeff = 1.0;
  c.rho_power = 1;
  double g = (2 * (cc - l) - d + 1) / 2;
  c.gauge_G = [=](double z) {
    return a / 2 * z * z + b * z + g * std::log(z);
  };
  c.gauge_K = [=](double z) { return a * z + b + g / z; };
  c.VS_x = [=](double r) {
    return a * a * r * r + 2 * a * b * r - b * (Dc - 1) / r +
           (cc * (cc - 2 * l - d + 2) + 2 * l * (d + l - 2)) / (r * r) + b * b -
           a * (Dc + 2 * n);
  };
  c.V_x = [c](double r) { return c.VS_x(r) + c.radial_N() / (4 * r * r); };
  c.x_lo = 0.1;
  c.x_hi = 3;
  c.z_lo = 0.2;
  c.z_hi = 4;
  double disc = b * b + 2 * a * (2 * l - 2 * cc + d - 1);
  if (n == 1 && disc >= 0) {
    double S = std::sqrt(disc);
    OracleN1 o;
    o.root_seed = -(b + S) / (2 * a);
    o.root_other = -(b - S) / (2 * a);
    o.energy_seed = b - S;
    o.energy_other = b + S;
    o.phi2 = [=](double z) { return 2 * std::sqrt(z) * S / (2 * a * z + b + S); };
    o.V2_z = [=](double z) {
      double den = 2 * a * z + b + S;
      return a * z * (1 + 8 * a / sq(den)) - 2 * a / den +
             (4 * (l - cc) + 2 * d - 3) / (4 * z) + b;
    };
    o.psi2_x = [=](double r) {
      return 2 * std::sqrt(r) * S / (b + 2 * a * r + S) *
             std::exp(-a / 2 * r * r - b * r - g * std::log(r));
    };
    o.V2_x = [=](double r) {
      double den = 2 * a * r + b + S;
      return a * a * r * r + 2 * a * b * r + a * (1 + 2 * cc - d - 2 * l) +
             b * b + 8 * a * a / sq(den) - 2 * a / (r * den) +
             (2 + 2 * cc - d - 2 * l) * (2 * cc - d - 2 * l + 4 * b * r) /
                 (4 * r * r);
    };
    o.VS2_x = [=](double r) {
      double den = S + 2 * a * r + b;
      return a * a * r * r + a * (2 * b * r + 2 * cc - d - 2 * l + 1) + b * b +
             8 * a * a / sq(den) - 2 * a / (r * den) +
             (cc * cc - cc * (d + 2 * l - 2 * b * r - 1) -
              b * r * (d + 2 * l - 2)) / (r * r) +
             (4 * l * (2 * l - 3) + d * (8 * l + 2) - 3) / (4 * r * r);
    };
    o.psiS2_x = [=](double r) {
      return 2 * std::sqrt(r) * S / (b + 2 * a * r + S) *
             std::exp(-a / 2 * r * r - b * r - (cc - l) * std::log(r));
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- Coulomb IX
CaseInstance case_coulomb9(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "coulomb9";
  c.name = "Coulomb-type potential IX (radial)";
  c.param_names = {"a", "b", "c", "l", "d"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), b = get(P, "b"), cc = get(P, "c"), l = get(P, "l"),
         d = get(P, "d");
  if (a == 0) throw Error(ErrorKind::InvalidInput, "a must be nonzero");
  c.n = n;
  c.form.n = n;
  c.form.a = {0, 0, 1, 0, 0};
  c.form.b = {2 * b, -(1 + 2 * cc - d - 2 * l), -2 * a, 0};
  c.form.v1 = {4 * a * b, -2.0 * a * n, 0};
  double Dc = d + 2 * l - 2 * cc;
  c.potential_tex =
      "b^2/r^4 + b(Dc-3)/r^3 + [c(c-2l-d+2)+2ab+2l(l+d-2)]/r^2 - a(2n+Dc-1)/r + a^2";
  c.domain_text = "r > 0; z = r in (0, inf); rho = r^2; radial (d, l)";
  c.radial = RadialData{d, l};
  c.z_of_x = [](double x) { return x; };
  c.x_of_z = [](double z) { return z; };
  c.dzdx = [](double) { return 1.0; };
  c.d2zdx2 = [](double) { return 0.0; };
  c.rho_coeff = 1.0;
  c.rho_power = 2;
  double g = (2 * (cc - l) - d + 1) / 2;
  c.gauge_G = [=](double z) { return a * z + b / z + g * std::log(z); };
  c.gauge_K = [=](double z) { return a - b / (z * z) + g / z; };
  c.VS_x = [=](double r) {
    return a * a + b * b / sq(r * r) + b * (Dc - 3) / (r * r * r) +
           (cc * (cc - 2 * l - d + 2) + 2 * a * b + 2 * l * (l + d - 2)) /
               (r * r) -
           a * (2 * n + Dc - 1) / r;
  };
  c.V_x = [c](double r) { return c.VS_x(r) + c.radial_N() / (4 * r * r); };
  c.x_lo = 0.1;
  c.x_hi = 5;
  c.z_lo = 0.3;
  c.z_hi = 4.5;
  double disc = 16 * a * b + sq(2 * l - 2 * cc + d - 1);
  if (n == 1 && disc >= 0) {
    double S = std::sqrt(disc);
    OracleN1 o;
    o.root_seed = (2 * l - 2 * cc + d - 1 - S) / (4 * a);
    o.root_other = (2 * l - 2 * cc + d - 1 + S) / (4 * a);
    o.energy_seed = (1 + 8 * a * b + 2 * cc - d - 2 * l - S) / 2;
    o.energy_other = (1 + 8 * a * b + 2 * cc - d - 2 * l + S) / 2;
    o.phi2 = [=](double z) {
      return 2 * z * S / (4 * a * z + 2 * cc - 2 * l - d + 1 + S);
    };
    o.V2_z = [=](double z) {
      double den = 4 * a * z + 1 + 2 * cc - d - 2 * l + S;
      return 4 * a * b + 2 * b / z + 32 * sq(a * z) / sq(den) - 8 * a * z / den;
    };
    o.psi2_x = [=](double r) {
      return 2 * r * S / (4 * a * r + 2 * cc - 2 * l - d + 1 + S) *
             std::exp(-a * r - b / r + (2 * (l - cc) + d - 1) / 2 * std::log(r));
    };
    o.V2_x = [=](double r) {
      double den = 1 + 2 * cc - 2 * l - d + 4 * a * r + S;
      return a * a + a * (2 * cc - 2 * l - d + 1) / r +
             (8 * a * b + (1 + 2 * cc - d - 2 * l) * (3 + 2 * cc - d - 2 * l)) /
                 (4 * r * r) +
             b * b / sq(r * r) + b * (2 * l - 2 * cc + d - 1) / (r * r * r) +
             32 * a * a / sq(den) - 8 * a / (r * den);
    };
    o.VS2_x = [=](double r) {
      double den = 1 + 2 * cc - 2 * l - d + 4 * a * r + S;
      return a * a + a * (2 * cc - 2 * l - d + 1) / r +
             (2 * a * b + cc * (cc - d - 2 * l + 2) + 2 * l * (d + l - 2)) /
                 (r * r) +
             b * b / sq(r * r) + b * (2 * l - 2 * cc + d - 1) / (r * r * r) +
             32 * a * a / sq(den) - 8 * a / (r * den);
    };
    o.psiS2_x = [=](double r) {
      return 2 * r * S / (4 * a * r + 2 * cc - 2 * l - d + 1 + S) *
             std::exp(-a * r - b / r + (l - cc) * std::log(r));
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- Periodic X
CaseInstance case_periodic10(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "periodic10";
  c.name = "Non-singular periodic potential X";
  c.param_names = {"a", "alpha"};
  c.params = P;
  check_params(c);
  double a = get(P, "a"), al = get(P, "alpha");
  if (al <= 0) throw Error(ErrorKind::InvalidInput, "alpha must be positive");
  if (a == 0) throw Error(ErrorKind::InvalidInput, "a must be nonzero");
  c.n = n;
  c.form.n = n;
  c.form.a = {al * al, 0, -al * al, 0, 0};
  c.form.b = {2 * a * al * al, -al * al, -2 * a * al * al, 0};
  c.form.v1 = {0, -2.0 * a * al * al * n, 0};
  c.potential_tex = "a^2 [a^2 sin^2(ax) - (2n+1) a cos(ax)]";
  c.domain_text = "x in R; z = cos(alpha x) in [-1, 1]";
  c.z_of_x = [al](double x) { return std::cos(al * x); };
  c.x_of_z = [al](double z) { return std::acos(z) / al; };
  c.dzdx = [al](double x) { return -al * std::sin(al * x); };
  c.d2zdx2 = [al](double x) { return -al * al * std::cos(al * x); };
  c.rho_coeff = 1.0;
  c.rho_power = 0;
  c.gauge_G = [=](double z) { return -a * z; };
  c.gauge_K = [=](double) { return -a; };
  c.V_x = [=](double x) {
    return al * al *
           (a * a * sq(std::sin(al * x)) - (2 * n + 1) * a * std::cos(al * x));
  };
  c.x_lo = -3;
  c.x_hi = 3;
  c.z_lo = -0.9;
  c.z_hi = 0.9;
  if (n == 1) {
    double R = std::sqrt(1 + 16 * a * a);
    OracleN1 o;
    o.root_seed = -(1 + R) / (4 * a);
    o.root_other = -(1 - R) / (4 * a);
    o.energy_seed = (1 - R) / 2 * al * al;
    o.energy_other = (1 + R) / 2 * al * al;
    o.phi2 = [=](double z) {
      return 2 * al * std::sqrt((1 - z * z) * (1 + 16 * a * a)) /
             (4 * a * z + 1 + R);
    };
    o.V2_z = [=](double z) {
      return 8 * a * al * al * (z + R * z + 4 * a) / sq(1 + R + 4 * a * z);
    };
    o.psi2_x = [=](double x) {
      return 2 * al * R * std::sin(al * x) / (4 * a * std::cos(al * x) + 1 + R) *
             std::exp(a * std::cos(al * x));
    };
    o.V2_x = [=](double x) {
      // log-derivative closed form: V2 = E2 + u'' + u'^2, u = ln psi2
      double cz = std::cos(al * x), sz = std::sin(al * x);
      double den = cz + (1 + R) / (4 * a);
      double up = al * cz / sz - a * al * sz + al * sz / den;
      double upp = -al * al / (sz * sz) - a * al * al * cz +
                   al * al * cz / den + al * al * sz * sz / sq(den);
      return (1 + R) / 2 * al * al + upp + up * up;
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- Lame XI
CaseInstance case_lame11(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "lame11";
  c.name = "A1 Lame potential XI";
  c.param_names = {"a1", "a2", "a3", "k1", "k2", "k3"};
  c.params = P;
  check_params(c);
  double a1 = get(P, "a1"), a2 = get(P, "a2"), a3 = get(P, "a3");
  double k1 = get(P, "k1"), k2 = get(P, "k2"), k3 = get(P, "k3");
  for (double k : {k1, k2, k3})
    if (k != 0 && k != 1)
      throw Error(ErrorKind::InvalidInput, "each k_i must be 0 or 1");
  c.n = n;
  c.form.n = n;
  double sA = a1 + a2 + a3, sk = k1 + k2 + k3;
  double e2 = a1 * a2 + a1 * a3 + a2 * a3;
  double m = 2.0 * n + sk;
  c.form.a = {-4 * a1 * a2 * a3, 4 * e2, -4 * sA, 4, 0};
  c.form.b = {2 * (a1 * a2 * (2 * k3 + 1) + a1 * a3 * (2 * k2 + 1) +
                   a2 * a3 * (2 * k1 + 1)),
              -4 * (a1 * (k2 + k3 + 1) + a2 * (k1 + k3 + 1) + a3 * (k1 + k2 + 1)),
              2 * (2 * sk + 3), 0};
  c.form.v1 = {a1 * sq(k2 + k3) + a2 * sq(k1 + k3) + a3 * sq(k1 + k2),
               m * (m + 1) - 2 * (k1 * k1 + k1 * k2 + k1 * k3 + k2 * k2 +
                                  k2 * k3 + k3 * k3),
               0};
  c.potential_tex = "m(m+1) wp(z), m = 2n + k1 + k2 + k3 (Treibich-Verdier for k != 0)";
  c.domain_text = "algebraic variable xi; energies are epsilon (shifted)";
  c.algebraic_only = true;
  c.lame_energy_shift = m * (m + 1) * sA / 3;
  double amax = std::max({a1, a2, a3});
  c.z_lo = amax + 0.2;
  c.z_hi = amax + 3.2;
  if (n == 1 && sk == 0) {
    double K = std::sqrt(sA * sA - 3 * e2);
    OracleN1 o;
    o.root_seed = (sA + K) / 3;
    o.root_other = (sA - K) / 3;
    o.energy_seed = 2 * sA - 2 * K;
    o.energy_other = 2 * sA + 2 * K;
    o.phi2 = [=](double xi) {
      return 4 * K * std::sqrt((xi - a1) * (xi - a2) * (xi - a3)) /
             (sA + K - 3 * xi);
    };
    c.oracle = o;
  }
  return c;
}

// ---------------------------------------------------------------- Lame XII
CaseInstance case_lame12(const std::map<std::string, double>& P, int n) {
  CaseInstance c;
  c.id = "lame12";
  c.name = "BC1 Lame potential XII";
  c.param_names = {"g2", "g3", "mu"};
  c.params = P;
  check_params(c);
  double g2 = get(P, "g2"), g3 = get(P, "g3"), mu = get(P, "mu");
  c.n = n;
  c.form.n = n;
  c.form.a = {-g3 / 2, -g2 / 2, 0, 2, 0};
  c.form.b = {-g2 * (2 * mu + 1) / 4, 0, 3 * (2 * mu + 1), 0};
  c.form.v1 = {0, n * (6.0 * mu + 2 * n + 1), 0};
  c.potential_tex = "kappa2 wp(2z) + kappa3 wp(z), kappa2 = 2mu(mu-1), kappa3 = (n+2mu)(2n+2mu+1)";
  c.domain_text = "algebraic variable tau = wp(z); H = -(1/2) d^2/dz^2";
  c.algebraic_only = true;
  c.rho_coeff = 0.5;
  c.rho_power = 0;
  c.z_lo = std::cbrt(1 + std::abs(g2) + std::abs(g3)) + 0.2;
  c.z_hi = c.z_lo + 3;
  if (n == 1 && g2 > 0) {
    double S = std::sqrt(3 * g2);
    OracleN1 o;
    o.root_seed = std::sqrt(g2) / (2 * std::sqrt(3.0));
    o.root_other = -std::sqrt(g2) / (2 * std::sqrt(3.0));
    o.energy_seed = -S * (2 * mu + 1) / 2;
    o.energy_other = S * (2 * mu + 1) / 2;
    o.phi2 = [=](double t) {
      return std::sqrt(6 * g2) * std::sqrt(4 * t * t * t - g2 * t - g3) /
             (S - 6 * t);
    };
    c.oracle = o;
  }
  return c;
}

} // namespace

double CaseInstance::rho_x(double x) const {
  if (algebraic_only)
    throw Error(ErrorKind::Domain, "algebraic-only case has no x-space weight");
  return rho_coeff * std::pow(z_of_x(x), rho_power);
}

double CaseInstance::radial_N() const {
  if (!radial) return 0.0;
  double d = radial->d_dim, l = radial->l;
  return d * d - 4 * d * (l + 1) - 4 * (l - 2) * l + 3;
}

const std::vector<CaseMeta>& case_registry() {
  static const std::vector<CaseMeta> reg = [] {
    std::vector<CaseMeta> v;
    std::map<std::string, double> dummy;
    auto add = [&](CaseInstance (*f)(const std::map<std::string, double>&, int),
                   std::map<std::string, double> p) {
      CaseInstance ci = f(p, 0);
      CaseMeta m;
      m.id = ci.id;
      m.name = ci.name;
      m.potential_tex = ci.potential_tex;
      m.domain_text = ci.domain_text;
      m.param_names = ci.param_names;
      m.weighted = !(ci.rho_coeff == 1.0 && ci.rho_power == 0);
      m.is_radial = ci.radial.has_value();
      m.algebraic_only = ci.algebraic_only;
      v.push_back(std::move(m));
    };
    add(case_morse1, {{"a", 1}, {"b", 1}, {"c", 1}, {"alpha", 1}});
    add(case_morse2, {{"a", 1}, {"b", 1}, {"d", 1}, {"alpha", 1}});
    add(case_morse3, {{"a", 1}, {"b", 1}, {"d", 1}, {"alpha", 0.5}});
    add(case_pt4, {{"a", 1}, {"c", 1}, {"alpha", 1}, {"p", 0}});
    add(case_pt5, {{"a", 1}, {"b", 1}, {"alpha", 1}, {"p", 1}});
    add(case_sextic6, {{"a", 1}, {"b", 1}});
    add(case_sextic7, {{"a", 1}, {"b", 1}, {"c", 1}, {"l", 1}, {"d", 2}});
    add(case_coulomb8, {{"a", 1}, {"b", 1}, {"c", 1}, {"l", 1}, {"d", 2}});
    add(case_coulomb9, {{"a", 1}, {"b", 1}, {"c", 1}, {"l", 1}, {"d", 2}});
    add(case_periodic10, {{"a", 1}, {"alpha", 1}});
    add(case_lame11,
        {{"a1", 1}, {"a2", 2}, {"a3", 3}, {"k1", 0}, {"k2", 0}, {"k3", 0}});
    add(case_lame12, {{"g2", 4}, {"g3", 0}, {"mu", 1}});
    return v;
  }();
  return reg;
}

std::vector<std::string> case_ids() {
  std::vector<std::string> out;
  for (const auto& m : case_registry()) out.push_back(m.id);
  return out;
}

CaseInstance instantiate(const std::string& id,
                         const std::map<std::string, double>& params, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "n must be non-negative");
  if (id == "morse1") return case_morse1(params, n);
  if (id == "morse2") return case_morse2(params, n);
  if (id == "morse3") return case_morse3(params, n);
  if (id == "pt4") return case_pt4(params, n);
  if (id == "pt5") return case_pt5(params, n);
  if (id == "sextic6") return case_sextic6(params, n);
  if (id == "sextic7") return case_sextic7(params, n);
  if (id == "coulomb8") return case_coulomb8(params, n);
  if (id == "coulomb9") return case_coulomb9(params, n);
  if (id == "periodic10") return case_periodic10(params, n);
  if (id == "lame11") return case_lame11(params, n);
  if (id == "lame12") return case_lame12(params, n);
  throw Error(ErrorKind::InvalidInput, "unknown case id '" + id + "'");
}

DomainInfo physical_domain(const CaseInstance& c) {
  DomainInfo d;
  d.x_lo = c.x_lo;
  d.x_hi = c.x_hi;
  d.half_line = c.radial.has_value();
  d.algebraic_only = c.algebraic_only;
  d.z_lo = c.z_lo;
  d.z_hi = c.z_hi;
  d.text = c.domain_text;
  return d;
}

} // namespace qes
