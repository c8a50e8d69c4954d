#include "unitcycle/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "unitcycle/enumerate.hpp"

namespace unitcycle::cli {

namespace {

constexpr u64 kMaxN = u64{1} << 62;

u64 parse_decimal(std::string_view s, std::string_view what) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed " + std::string(what) + " \"" + std::string(s) + "\"");
  return v;
}

// Resolved computation paths, in report order.
std::vector<Method> paths_for(const CliRequest& r) {
  if (r.method) return {*r.method};
  return {Method::formula, Method::blocks, Method::oracle};
}

struct IndexResult {
  CycleIndexPoly z;
  bool agree = true;
  std::string detail;  // "formula = blocks = oracle" or the first mismatch
};

IndexResult compute_index(u64 n, const std::vector<Method>& paths) {
  IndexResult res;
  res.z = cycle_index(n, paths.front());
  std::string chain(method_name(paths.front()));
  for (std::size_t i = 1; i < paths.size(); ++i) {
    const auto other = cycle_index(n, paths[i]);
    if (auto diff = first_difference(res.z, other)) {
      res.agree = false;
      res.detail = std::string(method_name(paths.front())) + " != " + std::string(method_name(paths[i])) +
                   " at " + *diff;
      return res;
    }
    chain += " = " + std::string(method_name(paths[i]));
  }
  res.detail = chain;
  return res;
}

void check_oracle_limit(u64 n, const std::vector<Method>& paths) {
  for (Method m : paths) {
    if (m == Method::oracle && n > kOracleLimit)
      throw std::invalid_argument("the oracle path is limited to n <= " + std::to_string(kOracleLimit) +
                                  "; pass --method formula or blocks");
  }
}

int run_index(const CliRequest& r, std::ostream& out, std::ostream& err) {
  const auto paths = paths_for(r);
  const auto res = compute_index(r.n, paths);
  if (!res.agree) {
    err << "mismatch: " << res.detail << '\n';
    return kExitMismatch;
  }
  out << render(res.z, r.format) << '\n';
  if (paths.size() > 1) err << res.detail << '\n';
  return kExitOk;
}

int run_verify(const CliRequest& r, std::ostream& out, std::ostream& err) {
  const auto res = compute_index(r.n, {Method::formula, Method::blocks, Method::oracle});
  if (r.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["n"] = r.n;
    doc["agree"] = res.agree;
    doc["detail"] = res.detail;
    out << doc.dump() << '\n';
  } else {
    out << res.detail << '\n';
  }
  if (!res.agree) {
    err << "mismatch: " << res.detail << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int run_orbits(const CliRequest& r, std::ostream& out) {
  const auto table = orbits(r.n);
  switch (r.format) {
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["n"] = r.n;
      nlohmann::ordered_json obs = nlohmann::ordered_json::object();
      for (const auto& [d, elems] : table.orbits) obs[std::to_string(d)] = elems;
      doc["orbits"] = std::move(obs);
      out << doc.dump() << '\n';
      break;
    }
    case Format::plain:
      for (const auto& [d, elems] : table.orbits) {
        out << "d=" << d << ':';
        for (u64 x : elems) out << ' ' << x;
        out << '\n';
      }
      break;
    case Format::latex:
      for (const auto& [d, elems] : table.orbits) {
        out << "\\Omega_{" << r.n << "}^{" << d << "}=\\{";
        for (std::size_t i = 0; i < elems.size(); ++i) out << (i ? "," : "") << elems[i];
        out << "\\}\n";
      }
      break;
  }
  return kExitOk;
}

int run_ctype(const CliRequest& r, std::ostream& out, std::ostream& err) {
  const i64 a = *r.a;
  const auto by_formula = ctype_of_unit(r.n, a);
  const auto by_oracle = r.n <= kOracleLimit ? std::optional(ctype_of_permutation_oracle(r.n, a)) : std::nullopt;
  const bool agree = !by_oracle || *by_oracle == by_formula;
  if (r.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["n"] = r.n;
    doc["a"] = a;
    doc["ctype"] = nlohmann::ordered_json::parse(render(by_formula, Format::json));
    if (by_oracle) {
      doc["oracle"] = nlohmann::ordered_json::parse(render(*by_oracle, Format::json));
      doc["agree"] = agree;
    }
    out << doc.dump() << '\n';
  } else {
    out << render(by_formula, r.format);
    if (!by_oracle) {
      out << " (oracle: skipped)\n";
    } else if (agree) {
      out << " (oracle: agree)\n";
    } else {
      out << " (oracle: disagree, " << render(*by_oracle, r.format) << ")\n";
    }
  }
  if (!agree) {
    err << "mismatch between ctype formula and permutation oracle\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run_count_subsets(const CliRequest& r, std::ostream& out, std::ostream& err) {
  if (r.k && *r.k > r.n) throw std::invalid_argument("--k must not exceed n");
  const auto paths = paths_for(r);
  const auto res = compute_index(r.n, paths);
  if (!res.agree) {
    err << "mismatch: " << res.detail << '\n';
    return kExitMismatch;
  }
  if (r.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["n"] = r.n;
    if (r.k) {
      doc["k"] = *r.k;
      doc["count"] = count_subset_classes_by_size(r.n, res.z).by_k[*r.k].get_str();
    } else {
      const auto counts = count_subset_classes_by_size(r.n, res.z);
      doc["total"] = counts.total.get_str();
      auto by_k = nlohmann::ordered_json::array();
      for (const auto& c : counts.by_k) by_k.push_back(c.get_str());
      doc["by_k"] = std::move(by_k);
    }
    out << doc.dump() << '\n';
  } else if (r.k) {
    out << count_subset_classes_by_size(r.n, res.z).by_k[*r.k].get_str() << '\n';
  } else {
    out << count_subset_classes_total(res.z).get_str() << '\n';
  }
  if (paths.size() > 1) err << res.detail << '\n';
  return kExitOk;
}

int run_count_orbits(const CliRequest& r, std::ostream& out, std::ostream& err) {
  const u64 count = count_element_orbits(r.n);
  const bool check = r.n <= kOracleLimit;
  const bool agree = !check || count_element_orbits_burnside(r.n) == count;
  if (r.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["n"] = r.n;
    doc["orbits"] = count;
    if (check) doc["burnside_agree"] = agree;
    out << doc.dump() << '\n';
  } else {
    out << count << '\n';
  }
  if (!agree) {
    err << "Burnside count disagrees with the divisor count\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

u64 parse_n(std::string_view text) {
  if (text.find_first_of("^*") == std::string_view::npos) {
    const u64 n = parse_decimal(text, "n");
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n > kMaxN) throw std::invalid_argument("n is too large");
    return n;
  }
  u64 n = 1;
  std::size_t pos = 0;
  while (true) {
    const std::size_t star = text.find('*', pos);
    const std::string_view factor = text.substr(pos, star == std::string_view::npos ? text.npos : star - pos);
    const std::size_t caret = factor.find('^');
    const u64 p = parse_decimal(factor.substr(0, caret), "prime");
    const u64 e = caret == std::string_view::npos ? 1 : parse_decimal(factor.substr(caret + 1), "exponent");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " in factored n is not prime");
    if (e == 0 || e > 62) throw std::invalid_argument("exponent out of range in factored n");
    for (u64 i = 0; i < e; ++i) {
      if (n > kMaxN / p) throw std::invalid_argument("n is too large");
      n *= p;
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return n;
}

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
  try {
    if (request.n == 0) throw std::invalid_argument("n must be positive");
    if ((request.command == Command::ctype) != request.a.has_value())
      throw std::invalid_argument("--a is required by ctype and accepted by no other command");
    if (request.k && request.command != Command::count_subsets)
      throw std::invalid_argument("--k is only accepted by count-subsets");
    if (request.command == Command::index || request.command == Command::count_subsets)
      check_oracle_limit(request.n, paths_for(request));
    if (request.command == Command::verify) check_oracle_limit(request.n, {Method::oracle});

    switch (request.command) {
      case Command::index: return run_index(request, out, err);
      case Command::verify: return run_verify(request, out, err);
      case Command::orbits: return run_orbits(request, out);
      case Command::ctype: return run_ctype(request, out, err);
      case Command::count_subsets: return run_count_subsets(request, out, err);
      case Command::count_orbits: return run_count_orbits(request, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle index of the unit group U_n acting on Z_n by multiplication"};
  app.require_subcommand(1);

  struct Options {
    std::string n;
    std::string method;
    std::string format = "plain";
    std::optional<i64> a;
    std::optional<u64> k;
  } opts;

  auto add_common = [&](CLI::App* sub, bool with_method) {
    sub->add_option("--n", opts.n, "modulus, decimal or factored like 2^3*5")->required();
    sub->add_option("--format", opts.format, "plain, latex or json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    if (with_method)
      sub->add_option("--method", opts.method, "formula, blocks, oracle or all")
          ->check(CLI::IsMember({"formula", "blocks", "oracle", "all"}));
  };

  const std::array<std::pair<const char*, Command>, 6> commands{{
      {"index", Command::index},
      {"orbits", Command::orbits},
      {"ctype", Command::ctype},
      {"count-subsets", Command::count_subsets},
      {"count-orbits", Command::count_orbits},
      {"verify", Command::verify},
  }};
  const std::array<const char*, 6> descriptions{
      "print the cycle index", "print the orbits Omega_n^d", "cycle type of x -> a x",
      "count U_n-classes of subsets of Z_n", "count U_n-orbits on Z_n", "check formula = blocks = oracle"};

  std::vector<std::pair<CLI::App*, Command>> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    const Command c = commands[i].second;
    add_common(sub, c == Command::index || c == Command::count_subsets);
    if (c == Command::ctype) sub->add_option("--a", opts.a, "unit modulo n")->required();
    if (c == Command::count_subsets) sub->add_option("--k", opts.k, "subset size");
    subs.emplace_back(sub, c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  CliRequest request;
  for (const auto& [sub, c] : subs) {
    if (sub->parsed()) request.command = c;
  }
  try {
    request.n = parse_n(opts.n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  request.format = *parse_format(opts.format);
  request.a = opts.a;
  request.k = opts.k;
  if (opts.method.empty()) {
    if (request.n > kSelfVerifyLimit) request.method = Method::formula;
  } else if (opts.method != "all") {
    request.method = parse_method(opts.method);
  }
  return run(request, out, err);
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace unitcycle::cli
