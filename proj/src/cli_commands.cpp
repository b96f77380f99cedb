#include "cli_commands.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <sstream>

#include "dedekind.hpp"
#include "diagrams.hpp"
#include "records.hpp"
#include "sl2z.hpp"
#include "splice.hpp"
#include "tridiag.hpp"
#include "verify_suites.hpp"

namespace cli {

using exact::Int;
using exact::Rat;

namespace {

Int parse_int(const std::string& text) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw exact::ValidationError("not an integer: '" + text + "'");
    }
}

std::vector<Rat> parse_rationals(const std::vector<std::string>& texts) {
    std::vector<Rat> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(exact::parse_rational(t));
    return out;
}

std::string join_ints(const std::vector<Int>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += exact::to_string(v[i]);
    }
    return out;
}

// Output helper: human-readable lines by default, `key=value` lines with
// --machine. Exactly one of the two styles is emitted per run.
struct Report {
    std::ostream& out;
    bool machine;

    void line(const std::string& human) {
        if (!machine) out << human << "\n";
    }
    void kv(const std::string& key, const std::string& value) {
        if (machine) out << key << "=" << value << "\n";
    }
    void both(const std::string& human, const std::string& key, const std::string& value) {
        line(human);
        kv(key, value);
    }
};

void print_element(Report& rep, const diagrams::Element& z) {
    rep.line("element:");
    const auto* b = z.basis();
    for (const auto& [mono, coeff] : z.terms()) {
        std::string name = b->monomial_name(mono);
        rep.line("  " + name + ": " + exact::to_string(coeff));
        rep.kv("term." + name, exact::to_string(coeff));
    }
}

struct SpliceArgs {
    std::string records_path, knot1, knot2;
    std::string p, q, r, s;
    bool general = false;
    int cap = 5;
};

void cmd_splice(Report& rep, const SpliceArgs& a) {
    auto recs = records::load_records_file(a.records_path);
    splice::KnotRecord k1 = records::find_record(recs, a.knot1);
    splice::KnotRecord k2 = records::find_record(recs, a.knot2);
    splice::GluingMatrix g(parse_int(a.p), parse_int(a.q), parse_int(a.r), parse_int(a.s));

    auto [ok, lam] = splice::is_qhs(g, k1.framing, k2.framing);
    if (!ok) throw exact::NotQHSError("the splice is not a rational homology sphere");

    auto hc = splice::hopf_chain(g);
    Rat kap = splice::kappa(g, k1.framing, k2.framing);

    rep.both("lambda = " + exact::to_string(lam), "lambda", exact::to_string(lam));
    rep.line("chain = [" + join_ints(hc.chain, ", ") + "]  (parity " +
             std::to_string(hc.parity) + ")");
    rep.kv("chain", join_ints(hc.chain, ","));
    rep.kv("parity", std::to_string(hc.parity));
    rep.both("kappa = " + exact::to_string(kap), "kappa", exact::to_string(kap));

    diagrams::Element raw = diagrams::unit(splice::shared_basis(2, a.cap));
    Rat lw, l2;
    if (k1.framing.is_null() && k2.framing.is_null()) {
        auto res = splice::splice_lmo_truncated(g, k1, k2, a.cap);
        if (res.lambda_w != splice::casson_walker(g, k1, k2) ||
            res.lambda2 != splice::lambda2_splice(g, k1, k2))
            throw exact::ConsistencyError(
                "symbolic splice disagrees with the closed formulas");
        lw = res.lambda_w;
        l2 = res.lambda2;
        raw = *res.raw;
    } else {
        const auto& b = splice::shared_basis(2, a.cap);
        splice::KnotRecord k1flat = k1, k2flat = k2;
        k1flat.framing = splice::FramingFraction();
        k2flat.framing = splice::FramingFraction();
        diagrams::Element z1 = splice::wheeled_invariant(k1flat, b, splice::kColor1);
        diagrams::Element z2 = splice::wheeled_invariant(k2flat, b, splice::kColor2);
        diagrams::Element total =
            splice::splice_lmo_general(g, k1.framing, k2.framing, z1, z2, a.cap);
        std::tie(lw, l2) = splice::extract_invariants(total);
        raw = total;
    }
    rep.both("lambda_w = " + exact::to_string(lw), "lambda_w", exact::to_string(lw));
    rep.both("lambda2 = " + exact::to_string(l2), "lambda2", exact::to_string(l2));
    if (a.general) print_element(rep, raw);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact low-degree invariants of spliced rational homology spheres"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "print key=value lines only");

    std::function<void(Report&)> action;

    // dedekind <p> <q>
    {
        auto* sub = app.add_subcommand("dedekind", "Dedekind symbol S(p/q)");
        sub->fallthrough();
        auto p = std::make_shared<std::string>(), q = std::make_shared<std::string>();
        sub->add_option("p", *p)->required();
        sub->add_option("q", *q)->required();
        sub->callback([&action, p, q] {
            action = [p, q](Report& rep) {
                dedekind::CoprimePair pq(parse_int(*p), parse_int(*q));
                Rat sym = dedekind::dedekind_symbol(pq);
                rep.both("S(" + *p + "/" + *q + ") = " + exact::to_string(sym), "symbol",
                         exact::to_string(sym));
            };
        });
    }

    // decompose <a11> <a12> <a21> <a22>
    {
        auto* sub = app.add_subcommand("decompose", "factor an SL2(Z) matrix into generators");
        sub->fallthrough();
        auto e = std::make_shared<std::vector<std::string>>();
        sub->add_option("entries", *e, "a11 a12 a21 a22")->required()->expected(4);
        sub->callback([&action, e] {
            action = [e](Report& rep) {
                sl2z::Mat2Z m{parse_int((*e)[0]), parse_int((*e)[1]), parse_int((*e)[2]),
                              parse_int((*e)[3])};
                if (m.det() != 1)
                    throw exact::ValidationError("matrix must have determinant 1");
                auto word = sl2z::decompose(m);
                if (!(sl2z::recompose(word) == m))
                    throw exact::ConsistencyError("factorization failed to recompose");
                rep.both("word = [" + join_ints(word, ", ") + "]", "word",
                         join_ints(word, ","));
            };
        });
    }

    // chain <p> <q> <r> <s>
    {
        auto* sub = app.add_subcommand("chain", "surgery chain presenting a gluing matrix");
        sub->fallthrough();
        auto e = std::make_shared<std::vector<std::string>>();
        sub->add_option("entries", *e, "p q r s")->required()->expected(4);
        sub->callback([&action, e] {
            action = [e](Report& rep) {
                splice::GluingMatrix g(parse_int((*e)[0]), parse_int((*e)[1]),
                                       parse_int((*e)[2]), parse_int((*e)[3]));
                auto hc = splice::hopf_chain(g);
                rep.line("chain = [" + join_ints(hc.chain, ", ") + "]  (parity " +
                         std::to_string(hc.parity) + ")");
                rep.kv("chain", join_ints(hc.chain, ","));
                rep.kv("parity", std::to_string(hc.parity));
            };
        });
    }

    // signature <c1> <c2> ...
    {
        auto* sub = app.add_subcommand("signature", "signature of a tridiagonal matrix");
        sub->fallthrough();
        auto e = std::make_shared<std::vector<std::string>>();
        sub->add_option("diagonal", *e, "diagonal entries (rationals)")->required();
        sub->callback([&action, e] {
            action = [e](Report& rep) {
                auto c = parse_rationals(*e);
                int sig = tridiag::signature_recursive(c);
                rep.both("signature = " + std::to_string(sig), "signature",
                         std::to_string(sig));
            };
        });
    }

    // corners <c1> <c2> ...
    {
        auto* sub = app.add_subcommand("corners", "corner entries of the inverse matrix");
        sub->fallthrough();
        auto e = std::make_shared<std::vector<std::string>>();
        sub->add_option("diagonal", *e, "diagonal entries (rationals)")->required();
        sub->callback([&action, e] {
            action = [e](Report& rep) {
                auto c = parse_rationals(*e);
                auto ic = tridiag::inverse_corners(c);
                rep.both("top_left = " + exact::to_string(ic.top_left), "top_left",
                         exact::to_string(ic.top_left));
                rep.both("off_corner = " + exact::to_string(ic.off_corner), "off_corner",
                         exact::to_string(ic.off_corner));
                rep.both("bottom_right = " + exact::to_string(ic.bottom_right),
                         "bottom_right", exact::to_string(ic.bottom_right));
            };
        });
    }

    // kirby-melvin <c1> <c2> ...
    {
        auto* sub =
            app.add_subcommand("kirby-melvin", "3*signature - trace and its arithmetic form");
        sub->fallthrough();
        auto e = std::make_shared<std::vector<std::string>>();
        sub->add_option("diagonal", *e, "diagonal entries (integers)")->required();
        sub->callback([&action, e] {
            action = [e](Report& rep) {
                std::vector<Int> c;
                c.reserve(e->size());
                for (const auto& t : *e) c.push_back(parse_int(t));
                auto [value, bracket] = tridiag::kirby_melvin(c);
                rep.both("3*signature - trace = " + exact::to_string(value), "value",
                         exact::to_string(value));
                rep.both("bracket = " + exact::to_string(bracket), "bracket",
                         exact::to_string(bracket));
            };
        });
    }

    // splice --records FILE --knot1 A --knot2 B <p> <q> <r> <s>
    {
        auto* sub = app.add_subcommand("splice", "invariants of a splice of two knots");
        sub->fallthrough();
        auto a = std::make_shared<SpliceArgs>();
        sub->add_option("--records", a->records_path, "knot record file")->required();
        sub->add_option("--knot1", a->knot1, "record name for the first side")->required();
        sub->add_option("--knot2", a->knot2, "record name for the second side")->required();
        sub->add_option("p", a->p)->required();
        sub->add_option("q", a->q)->required();
        sub->add_option("r", a->r)->required();
        sub->add_option("s", a->s)->required();
        sub->add_flag("--general", a->general, "also print the full truncated element");
        sub->add_option("--cap", a->cap, "truncation degree (4 or 5)")->default_val(5);
        sub->callback([&action, a] {
            action = [a](Report& rep) { cmd_splice(rep, *a); };
        });
    }

    // surgery --records FILE --knot A <r> <s>
    {
        auto* sub = app.add_subcommand("surgery", "rational surgery on a knot record");
        sub->fallthrough();
        auto path = std::make_shared<std::string>(), knot = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>(), s = std::make_shared<std::string>();
        sub->add_option("--records", *path, "knot record file")->required();
        sub->add_option("--knot", *knot, "record name")->required();
        sub->add_option("r", *r, "surgery numerator")->required();
        sub->add_option("s", *s, "surgery denominator")->required();
        sub->callback([&action, path, knot, r, s] {
            action = [path, knot, r, s](Report& rep) {
                auto recs = records::load_records_file(*path);
                auto res = splice::rational_surgery(records::find_record(recs, *knot),
                                                    parse_int(*r), parse_int(*s));
                rep.both("lambda_w = " + exact::to_string(res.lambda_w), "lambda_w",
                         exact::to_string(res.lambda_w));
                rep.both("lambda2 = " + exact::to_string(res.lambda2), "lambda2",
                         exact::to_string(res.lambda2));
            };
        });
    }

    // lens <r> <s>
    {
        auto* sub = app.add_subcommand("lens", "invariants of a lens space");
        sub->fallthrough();
        auto r = std::make_shared<std::string>(), s = std::make_shared<std::string>();
        sub->add_option("r", *r)->required();
        sub->add_option("s", *s)->required();
        sub->callback([&action, r, s] {
            action = [r, s](Report& rep) {
                auto res = splice::lens(parse_int(*r), parse_int(*s));
                rep.both("lambda_w = " + exact::to_string(res.lambda_w), "lambda_w",
                         exact::to_string(res.lambda_w));
                rep.both("lambda2 = " + exact::to_string(res.lambda2), "lambda2",
                         exact::to_string(res.lambda2));
            };
        });
    }

    // verify [suite] [--seed N]
    {
        auto* sub = app.add_subcommand("verify", "run the property suites");
        sub->fallthrough();
        auto selector = std::make_shared<std::string>("all");
        auto seed = std::make_shared<std::uint64_t>(1);
        sub->add_option("suite", *selector,
                        "all, reciprocity, signatures, kirby-melvin, sl2-roundtrip, "
                        "diagram-dims, d-omega, fujita-consistency, lambda2-consistency, "
                        "kappa-threeway");
        sub->add_option("--seed", *seed, "random seed")->default_val(1);
        sub->callback([&action, selector, seed] {
            action = [selector, seed](Report& rep) {
                auto results = verify::run_suites(*selector, *seed);
                long bad = 0;
                for (const auto& r : results) {
                    bad += r.failures;
                    rep.line(r.name + ": " + std::to_string(r.cases) + " cases, " +
                             std::to_string(r.failures) + " failures" +
                             (r.passed() ? "" : "  ** FAIL **"));
                    rep.kv("suite." + r.name + ".cases", std::to_string(r.cases));
                    rep.kv("suite." + r.name + ".failures", std::to_string(r.failures));
                }
                if (bad > 0)
                    throw exact::ConsistencyError(std::to_string(bad) +
                                                  " property failures");
            };
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    Report rep{out, machine};
    try {
        action(rep);
    } catch (const exact::NotQHSError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const exact::ConsistencyError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const exact::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace cli
