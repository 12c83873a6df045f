#include "pisot/commands.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "pisot/cps.hpp"
#include "pisot/error.hpp"
#include "pisot/io.hpp"
#include "pisot/kernels.hpp"
#include "pisot/nielsen.hpp"
#include "pisot/relations.hpp"
#include "pisot/tiling.hpp"
#include "pisot/window.hpp"

namespace pisot::cli {

namespace {

std::string fixed(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

Substitution load_positive(const std::string& file) {
  return Substitution(load_substitution(file));
}

Cps cps_of(const Substitution& s) { return Cps(pisot_check(abelianization(s.map()))); }

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace

int cmd_analyze(const std::string& file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AnalysisReport report = analyze(load_substitution(file));
    out << render_report(report);
    return report.pisot ? kSuccess : kFalse;
  });
}

int cmd_window(const std::string& file, int iterations, const std::string& out_svg,
               const std::optional<std::string>& out_text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (iterations < 0 || iterations > kMaxWindowIterations) {
      throw Error(ErrorCode::invalid_argument, "--iterations must be in [0, 12]");
    }
    const Substitution sigma = load_positive(file);
    const Cps cps = cps_of(sigma);
    const Endomorphism sigma_b = boundary_endomorphism(sigma);
    const WindowApprox wa = iterate_window(sigma_b, canonical_seeds(cps), iterations, cps);

    for (std::size_t i = 0; i < 3; ++i) {
      const auto crossings = kernels::count_self_intersections(wa.boundaries[i]);
      if (crossings > 0) {
        err << "warning: boundary of window " << generator_name(static_cast<int>(i)) << " has "
            << crossings << " self-intersections\n";
      }
    }
    write_file(out_svg, render_window_svg(wa));
    if (out_text) write_file(*out_text, render_polylines_text(wa));

    out << "boundary_substitution: " << sigma_b.str() << '\n';
    out << "iterations: " << iterations << '\n';
    for (std::size_t i = 0; i < 3; ++i) {
      out << "window_" << generator_name(static_cast<int>(i)) << ": segments "
          << wa.words[i].size() << ", area " << fixed(wa.areas[i]) << '\n';
    }
    return kSuccess;
  });
}

int cmd_tiling(const std::string& file, std::size_t length, const std::string& out_svg,
               const std::optional<std::string>& out_text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Substitution sigma = load_positive(file);
    const Cps cps = cps_of(sigma);
    const Seed seed = find_periodic_seed(sigma);
    const Word prefix = fixed_point_prefix(sigma, seed, length);
    const std::vector<Letter> head(prefix.begin(),
                                   prefix.begin() + static_cast<std::ptrdiff_t>(length));
    const TilingPatch patch = realize(Word(head), cps);
    write_file(out_svg, render_tiling_svg(patch));
    if (out_text) {
      std::ostringstream os;
      write_patch_text(os, patch);
      write_file(*out_text, os.str());
    }
    out << "seed: " << generator_name(seed.letter) << " power " << seed.power << '\n';
    out << "tiles: " << patch.segments.size() << '\n';
    out << "total_length: " << fixed(patch.total_length()) << '\n';
    return kSuccess;
  });
}

int cmd_verify(const std::string& file1, const std::string& file2,
               const std::optional<std::string>& rho_file, int depth, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Endomorphism sigma1 = load_substitution(file1);
    const Endomorphism sigma2 = load_substitution(file2);

    if (rho_file) {
      const std::string text = read_file(*rho_file);
      ConjugacyCertificate cert{ConjugacyKind::outer, parse_substitution(text),
                                Endomorphism::identity(), Word()};
      if (text.find("# inverse:") != std::string::npos) {
        cert = parse_certificate(text);
      } else {
        const auto inv = invert_automorphism(cert.rho);
        if (!inv) throw Error(ErrorCode::not_invertible, "could not invert " + cert.rho.str());
        cert.rho_inverse = *inv;
      }
      if (!verify_certificate(sigma1, sigma2, cert)) {
        out << "result: false\n";
        out << "relation: sigma1 != rho^-1 o sigma2 o rho for rho = " << cert.rho.str() << '\n';
        return kFalse;
      }
      out << "result: true\n" << render_certificate(cert);
      return kSuccess;
    }

    SearchOptions opts;
    opts.max_depth = depth;
    const SearchResult res = search_conjugator(sigma1, sigma2, opts);
    if (!res.found()) {
      out << "result: NotFound\nreason: " << res.reason << '\n';
      return kFalse;
    }
    out << "result: true\nreason: " << res.reason << '\n' << render_certificate(*res.certificate);
    return kSuccess;
  });
}

int cmd_compare(const std::string& file1, const std::string& file2, const CompareOptions& options,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Substitution s1 = load_positive(file1);
    const Substitution s2 = load_positive(file2);
    const LiReport li = li_subword_equivalence(s1, s2, options.k, options.prefix);
    for (std::size_t k = 1; k <= li.equal.size(); ++k) {
      out << "factors_k" << k << ": " << (li.equal[k - 1] ? "equal" : "differ") << '\n';
    }
    out << "li: " << (li.consistent() ? "consistent with LI" : "not LI") << " (prefix "
        << li.prefix_length << ")\n";
    bool ok = li.consistent();
    if (options.rule) {
      const RewriteRule rule = RewriteRule::parse(*options.rule);
      const MldReport mld = mld_rewrite_verify(s1, s2, rule, std::min<std::size_t>(options.k, 8),
                                               options.levels);
      for (const auto& lv : mld.levels) {
        out << "mld_level" << lv.level << ": subwords " << (lv.subwords_ok ? "ok" : "FAIL")
            << ", length " << (lv.length_ok ? "ok" : "FAIL") << " (ratio "
            << fixed(lv.length_ratio) << ")\n";
      }
      out << "mld_rule: " << rule.str() << ' ' << (mld.passed() ? "passes" : "fails")
          << " (scale " << mld.scale << ")\n";
      ok = mld.passed();
    }
    return ok ? kSuccess : kFalse;
  });
}

}  // namespace pisot::cli
