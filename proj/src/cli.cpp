#include "ellvb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ellvb/classify.hpp"
#include "ellvb/errors.hpp"
#include "ellvb/functors.hpp"
#include "ellvb/isogeny.hpp"
#include "ellvb/jordan.hpp"
#include "ellvb/json_io.hpp"
#include "ellvb/theta.hpp"

namespace ellvb::cli {

namespace {

double parse_real(const std::string& text, const std::string& whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(v))
    throw ParseError("cannot read complex number \"" + whole + "\"");
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw ParseError("empty complex number");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // The split is the last sign that is not a leading sign or an exponent sign.
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(body, text)};
  const std::string re = body.substr(0, split);
  const std::string im = body.substr(split);
  if (im.size() > 1 && im[1] == '+') throw ParseError("cannot read complex number \"" + text + "\"");
  return {parse_real(re, text), parse_real(im, text)};
}

namespace {

enum class Format { kJson, kTable };

struct Io {
  std::istream& in;
  std::ostream& out;
  Format format = Format::kJson;
};

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open \"" + path + "\"");
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

FactorOfAutomorphy read_bundle(const std::string& path, std::istream& in) {
  return bundle_from_json(read_json(path, in));
}

std::string format_complex(Complex c) {
  std::ostringstream os;
  os << std::setprecision(6) << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
     << "i";
  return os.str();
}

void print_table(std::ostream& out, const FactorOfAutomorphy& f) {
  const LaurentMatrix& a = f.generator();
  const int n = a.size();
  std::vector<std::string> cells;
  size_t width = 1;
  for (const auto& e : a.entries()) {
    cells.push_back(e.to_string());
    width = std::max(width, cells.back().size());
  }
  out << "tau = " << format_complex(f.torus().tau()) << "  rank = " << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << "  ";
      if (j + 1 < n) out << std::left << std::setw(static_cast<int>(width));
      out << cells[i * n + j];
    }
    out << "\n";
  }
}

void print_table(std::ostream& out, const Json& j) {
  size_t width = 0;
  for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items())
    out << std::left << std::setw(static_cast<int>(width)) << key << "  " << value.dump() << "\n";
}

void emit(const Io& io, const FactorOfAutomorphy& f) {
  if (io.format == Format::kTable) print_table(io.out, f);
  else io.out << to_json(f).dump() << "\n";
}

void emit(const Io& io, const Json& j) {
  if (io.format == Format::kTable && j.is_object()) print_table(io.out, j);
  else io.out << j.dump() << "\n";
}

Json partition_json(const Partition& p) { return Json(std::vector<int>(p.begin(), p.end())); }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Vector bundles on C*/<q> via factors of automorphy", "ellvb"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  // Shared option storage; each subcommand binds what it needs.
  std::string tau_text = "0+1i", a_text = "1+0i";
  std::string input = "-", left, right, witness;
  int r = 1, d = 0, k = 1, m = 1, p = 1, q = 1, nu_range = 10;
  int samples = 64, terms = kDefaultThetaTerms;
  double xi_a = 0.0, xi_b = 0.0, tol = 1e-9;
  std::uint64_t seed = 0;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "bundle JSON file, - for stdin");
  };

  auto* nf = app.add_subcommand("normal-form", "indecomposable generator for (r, d, a)");
  nf->add_option("--tau", tau_text)->required();
  nf->add_option("-r", r)->required();
  nf->add_option("-d", d)->required();
  nf->add_option("-a", a_text);
  auto* d0 = app.add_subcommand("deg0-form", "Jordan block generator A_r(a)");
  d0->add_option("--tau", tau_text)->required();
  d0->add_option("-r", r)->required();
  d0->add_option("-a", a_text);
  auto* tens = app.add_subcommand("tensor", "Kronecker product of two bundles");
  tens->add_option("--left", left)->required();
  tens->add_option("--right", right)->required();
  auto* sym = app.add_subcommand("sym", "symmetric power");
  add_input(sym);
  sym->add_option("-k", k)->required();
  auto* wedge = app.add_subcommand("wedge", "exterior power");
  add_input(wedge);
  wedge->add_option("-k", k)->required();
  auto* dl = app.add_subcommand("dual", "dual bundle");
  add_input(dl);
  auto* pb = app.add_subcommand("pullback", "pullback along the r-isogeny");
  add_input(pb);
  pb->add_option("-r", r)->required();
  auto* pf = app.add_subcommand("pushforward", "pushforward along the r-isogeny (input on the cover)");
  add_input(pf);
  pf->add_option("-r", r)->required();
  auto* rt = app.add_subcommand("roundtrip", "diagonal blocks of pullback of pushforward");
  add_input(rt);
  rt->add_option("-r", r)->required();
  auto* it = app.add_subcommand("iterate", "cocycle A(m, u)");
  add_input(it);
  it->add_option("-m", m)->required();
  auto* deg = app.add_subcommand("degree", "winding-number degree");
  add_input(deg);
  auto* rk = app.add_subcommand("rank", "rank");
  add_input(rk);
  auto* rec = app.add_subcommand("recognize", "descriptor of a degree-0 Jordan-block bundle");
  add_input(rec);
  rec->add_option("--nu-range", nu_range);
  auto* triv = app.add_subcommand("trivial-check", "triviality test for [[a]] or [[1,a(u)],[0,1]]");
  add_input(triv);
  triv->add_option("--nu-range", nu_range);
  auto* cg = app.add_subcommand("cg-table", "decomposition of F_p (x) F_q");
  cg->add_option("-p", p)->required();
  cg->add_option("-q", q)->required();
  auto* th = app.add_subcommand("theta-check", "verify theta quasi-periodicity");
  th->add_option("--tau", tau_text);
  th->add_option("--xi-a", xi_a);
  th->add_option("--xi-b", xi_b);
  th->add_option("--samples", samples);
  th->add_option("--terms", terms);
  th->add_option("--seed", seed);
  th->add_option("--tol", tol);
  auto* vw = app.add_subcommand("verify-witness", "check A(u)B(u) = B(qu)A'(u)");
  vw->add_option("--left", left)->required();
  vw->add_option("--right", right)->required();
  vw->add_option("--witness", witness)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Io io{in, out, format == "table" ? Format::kTable : Format::kJson};
  try {
    auto torus = [&] { return Torus(parse_complex(tau_text)); };
    auto bundle = [&] { return read_bundle(input, in); };

    if (nf->parsed()) {
      emit(io, normal_form(torus(), r, d, parse_complex(a_text)));
    } else if (d0->parsed()) {
      emit(io, normal_form_deg0(torus(), r, parse_complex(a_text)));
    } else if (tens->parsed()) {
      emit(io, tensor(read_bundle(left, in), read_bundle(right, in)));
    } else if (sym->parsed()) {
      emit(io, sym_power(bundle(), k));
    } else if (wedge->parsed()) {
      emit(io, wedge_power(bundle(), k));
    } else if (dl->parsed()) {
      emit(io, dual(bundle()));
    } else if (pb->parsed()) {
      const auto f = bundle();
      emit(io, pullback(IsogenyContext(f.torus(), r), f));
    } else if (pf->parsed() || rt->parsed()) {
      const auto f = bundle();
      if (r < 1) throw DomainError("covering degree must be positive");
      const IsogenyContext ctx(Torus(f.torus().tau() / static_cast<double>(r)), r);
      if (pf->parsed()) {
        emit(io, pushforward(ctx, f));
      } else {
        const auto blocks = roundtrip_diag(ctx, f);
        if (io.format == Format::kTable) {
          for (const auto& b : blocks) print_table(out, b);
        } else {
          Json list = Json::array();
          for (const auto& b : blocks) list.push_back(to_json(b));
          out << Json{{"blocks", list}}.dump() << "\n";
        }
      }
    } else if (it->parsed()) {
      const auto f = bundle();
      emit(io, Json{{"torus", to_json(f.torus())}, {"m", m}, {"A", to_json(iterate(f, m))}});
    } else if (deg->parsed()) {
      emit(io, Json{{"degree", degree(bundle())}});
    } else if (rk->parsed()) {
      emit(io, Json{{"rank", rank(bundle())}});
    } else if (rec->parsed()) {
      const auto desc = recognize_deg0(bundle(), nu_range);
      emit(io, Json{{"recognized", desc.has_value()},
                    {"descriptor", desc ? to_json(*desc) : Json(nullptr)}});
    } else if (triv->parsed()) {
      const auto f = bundle();
      if (f.rank() == 1) {
        const auto nu = is_trivial_rank1_constant(f, nu_range);
        emit(io, Json{{"trivial", nu.has_value()}, {"nu", nu ? Json(*nu) : Json(nullptr)}});
      } else {
        const auto b = is_trivial_unipotent2(f);
        emit(io, Json{{"trivial", b.has_value()}, {"b", b ? to_json(*b) : Json(nullptr)}});
      }
    } else if (cg->parsed()) {
      const auto indices = clebsch_gordan_F(p, q);
      const ConstMatrix prod = kronecker(jordan_block(p, 1.0), jordan_block(q, 1.0)).constant_value();
      const Partition jordan = jordan_type_unipotent(prod, 1.0);
      emit(io, Json{{"p", p},
                    {"q", q},
                    {"indices", indices},
                    {"jordan_partition", partition_json(jordan)},
                    {"consistent", Partition(indices.begin(), indices.end()) == jordan}});
    } else if (th->parsed()) {
      const Torus t = torus();
      const ThetaCharacteristic xi{xi_a, xi_b};
      const auto report = verify_theta_function(
          t, [&](int pp, int nn, Complex z) { return e_factor(t, xi, pp, nn, z); },
          [&](Complex z) { return theta_eval(t, xi, z, terms); }, samples, seed, tol);
      emit(io, Json{{"max_residual", report.max_residual},
                    {"samples", report.samples},
                    {"pass", report.pass}});
    } else if (vw->parsed()) {
      const auto f = read_bundle(left, in);
      const auto g = read_bundle(right, in);
      const Json wj = read_json(witness, in);
      const EquivalenceWitness w(laurent_matrix_from_json(wj.contains("B") ? wj.at("B") : wj));
      const double res = witness_residual(f, g, w);
      emit(io, Json{{"valid", res <= kIdentityTol}, {"residual", res}});
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitDomain;
  } catch (const Json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace ellvb::cli
