#include "ratwitt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ratwitt/almkvist.hpp"
#include "ratwitt/descent.hpp"
#include "ratwitt/fatou.hpp"
#include "ratwitt/fixtures.hpp"
#include "ratwitt/hankel.hpp"
#include "ratwitt/monoid.hpp"

namespace ratwitt {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Output {
  bool structured = false;
  std::ostream& out;

  // Plain mode prints `plain`; structured mode prints key=value lines.
  void emit(const Fields& fields, const std::string& plain) const {
    if (!structured) {
      out << plain << "\n";
      return;
    }
    for (const auto& [k, v] : fields) out << k << "=" << v << "\n";
  }
};

std::size_t default_precision() {
  const char* env = std::getenv("RATWITT_PREC_DEFAULT");
  if (!env || !*env) return 16;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) throw std::invalid_argument("RATWITT_PREC_DEFAULT must be a positive integer");
  return static_cast<std::size_t>(v);
}

// Series literals carry "; prec=" or are comma lists.
bool looks_like_series(const std::string& s) { return s.find(';') != std::string::npos || s.find(',') != std::string::npos; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct WittArgs {
  std::string op, ring;
  std::vector<std::string> operands;
  std::size_t prec = 0;
  unsigned long n = 0;
};

int run_witt(const Output& o, const WittArgs& a) {
  RingPtr ring = parse_ring(a.ring);
  const bool binary = a.op == "add" || a.op == "sub" || a.op == "mul";
  const std::size_t want = binary ? 2 : 1;
  if (a.operands.size() != want)
    throw std::invalid_argument("witt " + a.op + " takes " + std::to_string(want) + " operand(s)");
  if ((a.op == "frob" || a.op == "versch") && a.n == 0) throw std::invalid_argument("--N must be a positive integer");
  bool series_mode = a.prec > 0 || (a.op == "mul" && !ring->is_domain()) ||
                     ((a.op == "frob") && !ring->is_domain()) ||
                     std::any_of(a.operands.begin(), a.operands.end(), looks_like_series);
  Fields f{{"command", "witt " + a.op}, {"ring", ring->descriptor()}};
  std::string result;
  if (series_mode) {
    std::size_t prec = a.prec ? a.prec : default_precision();
    std::vector<WittSeries> s;
    for (const auto& t : a.operands) s.push_back(parse_series(ring, t, prec));
    WittSeries r = [&] {
      if (a.op == "add") return witt_add(s[0], s[1]);
      if (a.op == "sub") return witt_sub(s[0], s[1]);
      if (a.op == "mul") return witt_mul(s[0], s[1]);
      if (a.op == "neg") return witt_neg(s[0]);
      if (a.op == "frob") return frobenius(s[0], a.n);
      return verschiebung(s[0], a.n);
    }();
    result = format_series(r);
    f.push_back({"mode", "series"});
    f.push_back({"precision", std::to_string(r.precision())});
  } else {
    std::vector<RatWitt> v;
    for (const auto& t : a.operands) v.push_back(parse_ratwitt(ring, t));
    RatWitt r = [&] {
      if (a.op == "add") return rw_add(v[0], v[1]);
      if (a.op == "sub") return rw_sub(v[0], v[1]);
      if (a.op == "mul") return rw_mul(v[0], v[1]);
      if (a.op == "neg") return rw_neg(v[0]);
      if (a.op == "frob") return rw_frobenius(v[0], a.n);
      return rw_verschiebung(v[0], a.n);
    }();
    result = format_ratwitt(r);
    f.push_back({"mode", "rational"});
    f.push_back({"bound", std::to_string(r.bound())});
  }
  f.push_back({"result", result});
  o.emit(f, result);
  return kExitOk;
}

int run_ghost(const Output& o, const std::string& ring_text, const std::string& input, std::size_t upto) {
  RingPtr ring = parse_ring(ring_text);
  if (upto == 0) throw std::invalid_argument("--upto must be positive");
  WittSeries s = parse_series(ring, input, upto);
  if (s.precision() < upto)
    throw PrecisionError("ghost components up to " + std::to_string(upto), upto);
  auto w = ghost(s);
  std::string joined;
  Fields f{{"command", "ghost"}, {"ring", ring->descriptor()}};
  for (std::size_t i = 0; i < upto; ++i) {
    std::string v = ring->format(w[i]);
    joined += (i ? "," : "") + v;
    f.push_back({"w" + std::to_string(i + 1), v});
  }
  o.emit(f, joined);
  return kExitOk;
}

int run_hankel_rank(const Output& o, const std::string& ring_text, const std::string& input, std::size_t prec) {
  RingPtr ring = parse_ring(ring_text);
  Fields f{{"command", "hankel rank"}, {"ring", ring->descriptor()}};
  if (!looks_like_series(input) && prec == 0 && ring->is_field()) {
    RatWitt v = parse_ratwitt(ring, input);
    std::size_t r = hankel_rank_field(v);
    f.push_back({"input", format_ratwitt(v)});
    f.push_back({"exact", "true"});
    f.push_back({"rank", std::to_string(r)});
    o.emit(f, std::to_string(r));
    return kExitOk;
  }
  WittSeries s = parse_series(ring, input, prec ? prec : default_precision());
  if (!ring->is_field()) {
    RingPtr k = ring->fraction_field();
    s = s.mapped(k, [&](const Elem& c) { return ring->to_fraction(c); });
  }
  HankelRank hr = hankel_rank_field(s);
  f.push_back({"input", format_series(s)});
  f.push_back({"exact", "false"});
  f.push_back({"rank", hr.rank ? std::to_string(*hr.rank) : "unknown"});
  f.push_back({"view_order", std::to_string(hr.view_order)});
  f.push_back({"truncation_limited", yes_no(hr.truncation_limited)});
  o.emit(f, hr.text());
  return kExitOk;
}

int run_reconstruct(const Output& o, const std::string& ring_text, const std::string& series, std::size_t bound) {
  RingPtr ring = parse_ring(ring_text);
  if (bound == 0) throw std::invalid_argument("--bound must be positive");
  WittSeries s = parse_series(ring, series, default_precision());
  RatWitt r = ring->is_field() ? kronecker_reconstruct(s, bound) : reconstruct_over(s, bound);
  std::string text = format_ratwitt(r);
  o.emit({{"command", "reconstruct"}, {"ring", ring->descriptor()}, {"bound", std::to_string(r.bound())},
          {"result", text}},
         text);
  return kExitOk;
}

int run_wj(const Output& o, const std::string& ring_text, const std::string& series, std::size_t n, std::size_t prec) {
  RingPtr ring = parse_ring(ring_text);
  WittSeries s = parse_series(ring, series, prec ? prec : default_precision());
  WjVerdict v = wj_member_qualified(s, n);
  o.emit({{"command", "wj member"},
          {"ring", ring->descriptor()},
          {"bound", std::to_string(n)},
          {"precision", std::to_string(s.precision())},
          {"view_order", std::to_string(v.view_order)},
          {"conclusive", yes_no(v.conclusive)},
          {"member", yes_no(v.member)}},
         yes_no(v.member));
  return kExitOk;
}

int run_fatou(const Output& o, const std::string& ring_text, const std::string& input, std::size_t prec,
              std::size_t bound) {
  RingPtr a = parse_ring(ring_text);
  if (!a->is_domain()) throw DomainError(a->descriptor() + " is not a domain");
  RingPtr k = a->fraction_field();
  FatouVerdict v = [&] {
    if (looks_like_series(input)) {
      if (bound == 0) throw std::invalid_argument("series input needs --bound");
      return strong_fatou_check(a, parse_series(k, input, prec ? prec : default_precision()), bound);
    }
    return strong_fatou_check(a, parse_ratwitt(k, input), prec);
  }();
  if (o.structured)
    o.out << "command=fatou check\n" << v.text();
  else
    o.out << fatou_class_name(v.verdict) << "\n";
  return kExitOk;
}

int run_omega(const Output& o, const std::string& ring_text, const std::string& input) {
  RingPtr ring = parse_ring(ring_text);
  FormalSum u = parse_formal_sum(ring, input);
  RatWitt w = omega(u);
  std::string text = format_ratwitt(w);
  if (o.structured) {
    o.emit({{"command", "omega"}, {"ring", ring->descriptor()}, {"input", format_formal_sum(u)},
            {"input_zero", yes_no(u.is_zero())}, {"witt_zero", yes_no(w.is_witt_zero())}, {"result", text}},
           text);
    return kExitOk;
  }
  o.out << text << "\n";
  if (w.is_witt_zero()) o.out << "note: Witt zero" << (u.is_zero() ? "" : " from a non-zero sum") << "\n";
  return kExitOk;
}

int run_almkvist(const Output& o, const std::string& op, const std::string& ring_text, const std::string& matrix,
                 const std::string& other, unsigned long n) {
  RingPtr ring = parse_ring(ring_text);
  EndoModule a(parse_matrix(ring, matrix));
  RatWitt ca = char_map(a);
  if (op == "char") {
    std::string text = format_ratwitt(ca);
    o.emit({{"command", "almkvist char"}, {"ring", ring->descriptor()}, {"char_poly", format_poly(char_poly(a))},
            {"result", text}},
           text);
    return kExitOk;
  }
  EndoModule b = other.empty() ? a : EndoModule(parse_matrix(ring, other));
  RatWitt cb = char_map(b);
  const std::size_t p = 12;
  Fields f{{"command", "almkvist check"}, {"ring", ring->descriptor()}, {"N", std::to_string(n)}};
  bool all = true;
  auto check = [&](const std::string& key, bool ok) {
    f.push_back({key, yes_no(ok)});
    all = all && ok;
  };
  check("direct_sum", char_map(oracle_direct_sum(a, b)).to_series(p) == witt_add(ca.to_series(p), cb.to_series(p)));
  check("tensor", char_map(oracle_tensor(a, b)).to_series(p) == witt_mul(ca.to_series(p), cb.to_series(p)));
  check("frobenius", char_map(oracle_frobenius(a, n)).to_series(p) == frobenius(ca.to_series(p * n), n));
  check("verschiebung",
        char_map(oracle_verschiebung(a, n)).to_series(p * n) == verschiebung(ca.to_series(p), n));
  f.push_back({"pass", yes_no(all)});
  o.emit(f, all ? "pass" : "FAIL");
  return all ? kExitOk : kExitPropertyFailure;
}

int run_descent(const Output& o, unsigned long p, unsigned m, unsigned n, const std::string& input,
                const std::string& over) {
  TensorSplit split(p, m, n);
  if (!split.verify()) throw InternalError("tensor split construction failed its checks");
  Fields f{{"command", "descent check"},
           {"base", split.base()->descriptor()},
           {"extension", split.extension()->descriptor()}};
  bool ok = true;
  if (over == "base") {
    RatWitt v = parse_ratwitt(split.base(), input);
    RatWitt lifted = base_change(v, split.embedding());
    auto eq = equalizer_check(lifted, split);
    auto gi = galois_invariants_check(v, split);
    f.push_back({"input", format_ratwitt(v)});
    f.push_back({"base_change", format_ratwitt(lifted)});
    f.push_back({"equal", yes_no(eq.equal)});
    f.push_back({"splits", yes_no(gi.splits)});
    if (gi.preimage) f.push_back({"preimage", format_formal_sum(*gi.preimage)});
    f.push_back({"preimage_fixed", yes_no(gi.fixed)});
    f.push_back({"omega_matches", yes_no(gi.omega_matches)});
    ok = eq.equal && eq.consistent() && (!gi.splits || gi.pass());
    f.push_back({"pass", yes_no(ok)});
    o.emit(f, ok ? "descends" : "FAIL");
  } else {
    RatWitt v = parse_ratwitt(split.extension(), input);
    auto eq = equalizer_check(v, split);
    f.push_back({"input", format_ratwitt(v)});
    f.push_back({"equal", yes_no(eq.equal)});
    f.push_back({"coefficients_in_base", yes_no(eq.coefficients_in_base)});
    ok = eq.consistent();
    f.push_back({"pass", yes_no(ok)});
    o.emit(f, !ok ? "FAIL" : eq.equal ? "descends" : "does not descend");
  }
  return ok ? kExitOk : kExitPropertyFailure;
}

int run_demo(const Output& o, const std::string& name, bool list) {
  if (list || name.empty()) {
    for (const auto& fx : fixtures()) o.out << fx.criterion << " " << fx.name << ": " << fx.title << "\n";
    return kExitOk;
  }
  std::vector<std::string> names;
  if (name == "all")
    for (const auto& fx : fixtures()) names.push_back(fx.name);
  else
    names.push_back(name);
  bool all = true;
  for (const auto& n : names) {
    FixtureReport r;
    try {
      r = run_fixture(n);
    } catch (const std::out_of_range& e) {
      throw std::invalid_argument(e.what());
    }
    all = all && r.pass;
    if (o.structured) {
      o.out << "fixture=" << r.name << "\ncriterion=" << r.criterion << "\npass=" << yes_no(r.pass) << "\n";
      for (std::size_t i = 0; i < r.details.size(); ++i) o.out << "detail." << i + 1 << "=" << r.details[i] << "\n";
    } else {
      o.out << format_fixture_report(r);
    }
  }
  return all ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational Witt vector toolkit", "ratwitt"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "plain or structured (key=value)")
      ->check(CLI::IsMember({"plain", "structured"}));

  WittArgs w;
  auto* witt = app.add_subcommand("witt", "Witt ring operations");
  witt->require_subcommand(1);
  for (const char* op : {"add", "sub", "neg", "mul", "frob", "versch"}) {
    auto* sc = witt->add_subcommand(op);
    sc->add_option("--ring", w.ring, "ring descriptor")->required();
    sc->add_option("operands", w.operands, "P/Q literals or series")->required();
    sc->add_option("--prec", w.prec, "series mode at this precision");
    if (std::string(op) == "frob" || std::string(op) == "versch") sc->add_option("--N", w.n)->required();
    sc->callback([&w, op] { w.op = op; });
  }

  std::string ring, input, other, over = "extension";
  std::size_t prec = 0, bound = 0, upto = 0;
  unsigned long big_n = 2, p = 2;
  unsigned m = 1, n = 2;
  bool list = false;

  auto* gh = app.add_subcommand("ghost", "ghost components w_1..w_n");
  gh->add_option("--ring", ring)->required();
  gh->add_option("input", input)->required();
  gh->add_option("--upto", upto)->required();

  auto* hk = app.add_subcommand("hankel", "Hankel matrix queries");
  hk->require_subcommand(1);
  auto* hk_rank = hk->add_subcommand("rank");
  hk_rank->add_option("--ring", ring)->required();
  hk_rank->add_option("--input", input)->required();
  hk_rank->add_option("--prec", prec);

  auto* rc = app.add_subcommand("reconstruct", "rational representative of a series");
  rc->add_option("--ring", ring)->required();
  rc->add_option("--series", input, "a_0,a_1,..,a_N with a_0 = 1, or a series literal")->required();
  rc->add_option("--bound", bound)->required();

  auto* wj = app.add_subcommand("wj", "Hankel rank membership");
  wj->require_subcommand(1);
  auto* wj_mem = wj->add_subcommand("member");
  wj_mem->add_option("--ring", ring)->required();
  wj_mem->add_option("--bound", bound)->required();
  wj_mem->add_option("--series", input)->required();
  wj_mem->add_option("--prec", prec);

  auto* ft = app.add_subcommand("fatou", "strong Fatou reconstruction");
  ft->require_subcommand(1);
  auto* ft_check = ft->add_subcommand("check");
  ft_check->add_option("--ring", ring, "the subring A")->required();
  ft_check->add_option("--input", input, "P/Q or a series over Frac(A)")->required();
  ft_check->add_option("--prec", prec);
  ft_check->add_option("--bound", bound, "reconstruction bound for series input");

  auto* om = app.add_subcommand("omega", "image of a formal sum");
  om->add_option("--ring", ring)->required();
  om->add_option("sum", input)->required();

  std::string alm_op;
  auto* al = app.add_subcommand("almkvist", "characteristic polynomial map");
  al->require_subcommand(1);
  for (const char* op : {"char", "check"}) {
    auto* sc = al->add_subcommand(op);
    sc->add_option("--ring", ring)->required();
    sc->add_option("--matrix", input, "[[a,b],[c,d]]")->required();
    if (std::string(op) == "check") {
      sc->add_option("--other", other, "second matrix, defaults to the first");
      sc->add_option("--N", big_n);
    }
    sc->callback([&alm_op, op] { alm_op = op; });
  }

  auto* ds = app.add_subcommand("descent", "Galois descent over finite fields");
  ds->require_subcommand(1);
  auto* ds_check = ds->add_subcommand("check");
  ds_check->add_option("--p", p, "characteristic")->required();
  ds_check->add_option("--m", m, "base field GF(p^m)");
  ds_check->add_option("--n", n, "extension degree")->required();
  ds_check->add_option("--input", input)->required();
  ds_check->add_option("--over", over)->check(CLI::IsMember({"base", "extension"}));

  std::string demo_name;
  auto* dm = app.add_subcommand("demo", "run a named acceptance fixture");
  dm->add_option("name", demo_name, "fixture name or all");
  dm->add_flag("--list", list);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Output o{format == "structured", out};
  try {
    if (witt->parsed()) return run_witt(o, w);
    if (gh->parsed()) return run_ghost(o, ring, input, upto);
    if (hk_rank->parsed()) return run_hankel_rank(o, ring, input, prec);
    if (rc->parsed()) return run_reconstruct(o, ring, input, bound);
    if (wj_mem->parsed()) return run_wj(o, ring, input, bound, prec);
    if (ft_check->parsed()) return run_fatou(o, ring, input, prec, bound);
    if (om->parsed()) return run_omega(o, ring, input);
    if (al->parsed()) return run_almkvist(o, alm_op, ring, input, other, big_n);
    if (ds_check->parsed()) return run_descent(o, p, m, n, input, over);
    if (dm->parsed()) return run_demo(o, demo_name, list);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitPropertyFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace ratwitt
