#include <cctype>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "riordan/central.hpp"
#include "riordan/exponential.hpp"
#include "riordan/exprlang.hpp"
#include "riordan/output.hpp"
#include "riordan/riordan.hpp"

namespace {

using namespace riordan;

// Flag misuse discovered after CLI11 parsing (bad literal, wrong flag combo).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluate an expression so that coefficients 0..order are exact, retrying
// with more headroom when the expression itself loses precision (rev and
// valuation-shifting division shrink the order they were evaluated at).
// Every kernel operation is truncation-stable, so the slack does not change
// the surviving coefficients.
Series eval_at(const std::string& text, int order) {
    int slack = 8;
    for (int attempt = 0; attempt < 4; ++attempt) {
        Series s = eval_expr(text, order + slack);
        if (s.order() >= order) return s.truncated(order);
        slack += (order - s.order()) + 8;
    }
    throw MathError("expression '" + text + "' loses too much precision to evaluate");
}

Rat parse_rat_flag(const std::string& text, const char* flag) {
    try {
        return Rat::parse(text);
    } catch (const MathError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

OutputDoc series_doc(const Series& s, std::string command, int order,
                     std::vector<std::pair<std::string, std::string>> inputs) {
    OutputDoc doc;
    doc.kind = OutputDoc::Kind::Series;
    doc.rows.push_back(s.coeffs());
    doc.command = std::move(command);
    doc.order = order;
    doc.inputs = std::move(inputs);
    return doc;
}

OutputDoc pair_doc(const Series& a, const Series& b, std::string label_a,
                   std::string label_b, std::string command, int order,
                   std::vector<std::pair<std::string, std::string>> inputs) {
    OutputDoc doc;
    doc.kind = OutputDoc::Kind::Pair;
    doc.rows.push_back(a.coeffs());
    doc.rows.push_back(b.coeffs());
    doc.labels.push_back(std::move(label_a));
    doc.labels.push_back(std::move(label_b));
    doc.command = std::move(command);
    doc.order = order;
    doc.inputs = std::move(inputs);
    return doc;
}

/*
 * verify specs: a triangle expression built from
 *   riordan:u,v | central:g,f | expriordan:u,v | expcentral:g,f
 * (payload optionally wrapped in {...} or (...)), composed with
 *   inv(spec), mul(spec;spec), vhalf(spec), hhalf(spec).
 */
struct TriangleSpec {
    enum class Node { Base, Inv, Mul, VHalf, HHalf };
    enum class Kind { Riordan, Central, ExpRiordan, ExpCentral };

    Node node = Node::Base;
    Kind kind = Kind::Riordan;
    std::string e1, e2;
    std::unique_ptr<TriangleSpec> a, b;
};

class SpecParser {
  public:
    explicit SpecParser(std::string_view src) : s_(src) {}

    std::unique_ptr<TriangleSpec> run() {
        auto spec = parse();
        skip_ws();
        if (i_ < s_.size())
            throw ParseError(col(), "unexpected trailing text in verify spec");
        return spec;
    }

  private:
    int col() const { return static_cast<int>(i_) + 1; }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool keyword(std::string_view kw) {
        skip_ws();
        size_t save = i_;
        if (s_.substr(i_, kw.size()) != kw) return false;
        i_ += kw.size();
        skip_ws();
        if (i_ < s_.size() && s_[i_] == '(') {
            ++i_;
            return true;
        }
        i_ = save;
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (i_ >= s_.size() || s_[i_] != c)
            throw ParseError(col(), std::string("expected '") + c + "' in verify spec");
        ++i_;
    }

    std::unique_ptr<TriangleSpec> parse() {
        skip_ws();
        if (keyword("inv")) return wrapper(TriangleSpec::Node::Inv);
        if (keyword("vhalf")) return wrapper(TriangleSpec::Node::VHalf);
        if (keyword("hhalf")) return wrapper(TriangleSpec::Node::HHalf);
        if (keyword("mul")) {
            auto spec = std::make_unique<TriangleSpec>();
            spec->node = TriangleSpec::Node::Mul;
            spec->a = parse();
            expect(';');
            spec->b = parse();
            expect(')');
            return spec;
        }
        return base();
    }

    std::unique_ptr<TriangleSpec> wrapper(TriangleSpec::Node node) {
        auto spec = std::make_unique<TriangleSpec>();
        spec->node = node;
        spec->a = parse();
        expect(')');
        return spec;
    }

    std::unique_ptr<TriangleSpec> base() {
        skip_ws();
        size_t start = i_;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::string kind(s_.substr(start, i_ - start));
        auto spec = std::make_unique<TriangleSpec>();
        if (kind == "riordan") spec->kind = TriangleSpec::Kind::Riordan;
        else if (kind == "central") spec->kind = TriangleSpec::Kind::Central;
        else if (kind == "expriordan") spec->kind = TriangleSpec::Kind::ExpRiordan;
        else if (kind == "expcentral") spec->kind = TriangleSpec::Kind::ExpCentral;
        else
            throw ParseError(static_cast<int>(start) + 1,
                             "expected riordan:, central:, expriordan:, expcentral:, "
                             "inv(, mul(, vhalf( or hhalf(");
        expect(':');
        skip_ws();
        char close = 0;
        if (i_ < s_.size() && (s_[i_] == '{' || s_[i_] == '(')) {
            close = s_[i_] == '{' ? '}' : ')';
            ++i_;
        }
        spec->e1 = expression(close);
        expect(',');
        spec->e2 = expression(close);
        if (close) expect(close);
        return spec;
    }

    // Scan an expression, stopping before a top-level delimiter.  Parentheses
    // inside the expression nest; the stop set depends on the wrapper.
    std::string expression(char close) {
        skip_ws();
        size_t start = i_;
        int depth = 0;
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (depth == 0 && (c == ',' || c == ';' || c == '}')) break;
            ++i_;
        }
        std::string text(s_.substr(start, i_ - start));
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
            text.pop_back();
        if (text.empty()) throw ParseError(col(), "empty expression in verify spec");
        return text;
    }

    std::string_view s_;
    size_t i_ = 0;
};

Triangle build_triangle(const TriangleSpec& spec, int rows) {
    switch (spec.node) {
        case TriangleSpec::Node::Inv:
            return triangle_invert(build_triangle(*spec.a, rows));
        case TriangleSpec::Node::Mul:
            return matmul(build_triangle(*spec.a, rows), build_triangle(*spec.b, rows));
        case TriangleSpec::Node::VHalf:
            return vertical_half(build_triangle(*spec.a, 2 * rows - 1), rows);
        case TriangleSpec::Node::HHalf:
            return horizontal_half(build_triangle(*spec.a, 2 * rows - 1), rows);
        case TriangleSpec::Node::Base:
            break;
    }
    int order = rows - 1;
    Series e1 = eval_at(spec.e1, order);
    Series e2 = eval_at(spec.e2, order);
    switch (spec.kind) {
        case TriangleSpec::Kind::Riordan:
            return triangle(RiordanPair(e1, e2), rows);
        case TriangleSpec::Kind::Central:
            return central_triangle(CentralPair(e1, e2), rows);
        case TriangleSpec::Kind::ExpRiordan:
            return exp_triangle(ExpRiordanPair(e1, e2), rows);
        case TriangleSpec::Kind::ExpCentral:
            return exp_triangle(ExpCentralPair(e1, e2), rows);
    }
    throw MathError("corrupt verify spec");
}

struct Options {
    std::string format = "table";
    int order = 16;
    int rows = 12;
};

void emit(const OutputDoc& doc, const std::string& format) {
    std::cout << render(doc, format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Riordan-array calculator: triangles from ordinary, central "
                 "and exponential descriptions, group operations, halves, A/Z "
                 "sequences, moments, and identity verification"};
    app.require_subcommand(1);

    Options opt;
    int exit_code = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"table", "csv", "json"}))
            ->capture_default_str();
    };

    // series <expr>
    std::string series_expr;
    auto* cmd_series = app.add_subcommand("series", "Print coefficients 0..N of an expression");
    cmd_series->add_option("expr", series_expr, "Expression to expand")->required();
    cmd_series->add_option("--order", opt.order, "Highest coefficient index")
        ->capture_default_str();
    add_format(cmd_series);
    cmd_series->callback([&] {
        Series s = eval_at(series_expr, opt.order);
        emit(series_doc(s, "series", opt.order, {{"expr", series_expr}}), opt.format);
    });

    // riordan ...
    std::string u_expr, v_expr, u2_expr, v2_expr, g_expr, f_expr, g2_expr, f2_expr;
    std::string which = "vertical";
    auto* cmd_riordan = app.add_subcommand("riordan", "Ordinary (u, v) arrays");
    cmd_riordan->require_subcommand(1);

    auto* rio_matrix = cmd_riordan->add_subcommand("matrix", "Triangle of the pair (u, v)");
    rio_matrix->add_option("--u", u_expr, "First component, u(0) != 0")->required();
    rio_matrix->add_option("--v", v_expr, "Second component, v(0) = 0, v'(0) != 0")->required();
    rio_matrix->add_option("--rows", opt.rows, "Number of rows")->capture_default_str();
    add_format(rio_matrix);
    rio_matrix->callback([&] {
        RiordanPair p(eval_at(u_expr, opt.rows - 1), eval_at(v_expr, opt.rows - 1));
        emit(triangle_doc(triangle(p, opt.rows), "riordan matrix", opt.rows,
                          {{"u", u_expr}, {"v", v_expr}}),
             opt.format);
    });

    auto* rio_mul = cmd_riordan->add_subcommand("mul", "Group product of two pairs");
    rio_mul->add_option("--u1", u_expr)->required();
    rio_mul->add_option("--v1", v_expr)->required();
    rio_mul->add_option("--u2", u2_expr)->required();
    rio_mul->add_option("--v2", v2_expr)->required();
    rio_mul->add_option("--order", opt.order, "Series order of the result")
        ->capture_default_str();
    add_format(rio_mul);
    rio_mul->callback([&] {
        RiordanPair a(eval_at(u_expr, opt.order), eval_at(v_expr, opt.order));
        RiordanPair b(eval_at(u2_expr, opt.order), eval_at(v2_expr, opt.order));
        RiordanPair c = group_mul(a, b);
        emit(pair_doc(c.u(), c.v(), "u", "v", "riordan mul", opt.order,
                      {{"u1", u_expr}, {"v1", v_expr}, {"u2", u2_expr}, {"v2", v2_expr}}),
             opt.format);
    });

    auto* rio_inv = cmd_riordan->add_subcommand("inv", "Group inverse of a pair");
    rio_inv->add_option("--u", u_expr)->required();
    rio_inv->add_option("--v", v_expr)->required();
    rio_inv->add_option("--order", opt.order, "Series order of the result")
        ->capture_default_str();
    add_format(rio_inv);
    rio_inv->callback([&] {
        RiordanPair p(eval_at(u_expr, opt.order), eval_at(v_expr, opt.order));
        RiordanPair q = group_inv(p);
        emit(pair_doc(q.u(), q.v(), "u", "v", "riordan inv", opt.order,
                      {{"u", u_expr}, {"v", v_expr}}),
             opt.format);
    });

    auto* rio_az = cmd_riordan->add_subcommand("az", "A- and Z-sequences of a pair");
    rio_az->add_option("--u", u_expr)->required();
    rio_az->add_option("--v", v_expr)->required();
    rio_az->add_option("--order", opt.order, "Series order of the result")
        ->capture_default_str();
    add_format(rio_az);
    rio_az->callback([&] {
        RiordanPair p(eval_at(u_expr, opt.order + 1), eval_at(v_expr, opt.order + 1));
        AZPair az = az_sequences(p);
        emit(pair_doc(az.a(), az.z(), "A", "Z", "riordan az", opt.order,
                      {{"u", u_expr}, {"v", v_expr}}),
             opt.format);
    });

    auto* rio_halves = cmd_riordan->add_subcommand("halves", "Triangle of a half-array");
    rio_halves->add_option("--u", u_expr)->required();
    rio_halves->add_option("--v", v_expr)->required();
    rio_halves->add_option("--which", which, "Which half")
        ->check(CLI::IsMember({"vertical", "horizontal"}))
        ->capture_default_str();
    rio_halves->add_option("--rows", opt.rows, "Number of rows")->capture_default_str();
    add_format(rio_halves);
    rio_halves->callback([&] {
        int need = std::max(opt.rows + 1, std::max(2 * opt.rows - 2, 3));
        RiordanPair p(eval_at(u_expr, need), eval_at(v_expr, need));
        HalvesPairs h = halves_formula(p);
        const RiordanPair& sel = which == "vertical" ? h.vertical : h.horizontal;
        emit(triangle_doc(triangle(sel, opt.rows), "riordan halves", opt.rows,
                          {{"u", u_expr}, {"v", v_expr}, {"which", which}}),
             opt.format);
    });

    // central ...
    auto* cmd_central = app.add_subcommand("central", "Central {g, f} descriptions");
    cmd_central->require_subcommand(1);

    auto* cen_matrix = cmd_central->add_subcommand("matrix", "Triangle of the pair {g, f}");
    cen_matrix->add_option("--g", g_expr, "First component, g(0) != 0")->required();
    cen_matrix->add_option("--f", f_expr, "Second component, f(0) != 0")->required();
    cen_matrix->add_option("--rows", opt.rows, "Number of rows")->capture_default_str();
    add_format(cen_matrix);
    cen_matrix->callback([&] {
        CentralPair c(eval_at(g_expr, opt.rows - 1), eval_at(f_expr, opt.rows - 1));
        emit(triangle_doc(central_triangle(c, opt.rows), "central matrix", opt.rows,
                          {{"g", g_expr}, {"f", f_expr}}),
             opt.format);
    });

    auto* cen_from = cmd_central->add_subcommand(
        "from-standard", "Central description of a (u, v) pair");
    cen_from->add_option("--u", u_expr)->required();
    cen_from->add_option("--v", v_expr)->required();
    cen_from->add_option("--order", opt.order, "Series order of the result")
        ->capture_default_str();
    add_format(cen_from);
    cen_from->callback([&] {
        RiordanPair p(eval_at(u_expr, opt.order + 1), eval_at(v_expr, opt.order + 1));
        CentralPair c = from_standard(p);
        emit(pair_doc(c.g(), c.f(), "g", "f", "central from-standard", opt.order,
                      {{"u", u_expr}, {"v", v_expr}}),
             opt.format);
    });

    auto* cen_to = cmd_central->add_subcommand(
        "to-standard", "(u, v) pair generating the same triangle");
    cen_to->add_option("--g", g_expr)->required();
    cen_to->add_option("--f", f_expr)->required();
    cen_to->add_option("--order", opt.order, "Series order of the result")
        ->capture_default_str();
    add_format(cen_to);
    cen_to->callback([&] {
        CentralPair c(eval_at(g_expr, opt.order + 1), eval_at(f_expr, opt.order + 1));
        RiordanPair p = to_standard(c);
        emit(pair_doc(p.u(), p.v(), "u", "v", "central to-standard", opt.order,
                      {{"g", g_expr}, {"f", f_expr}}),
             opt.format);
    });

    auto* cen_mul = cmd_central->add_subcommand("mul", "Product in central form");
    cen_mul->add_option("--g1", g_expr)->required();
    cen_mul->add_option("--f1", f_expr)->required();
    cen_mul->add_option("--g2", g2_expr)->required();
    cen_mul->add_option("--f2", f2_expr)->required();
    cen_mul->add_option("--order", opt.order, "Series order of the result")
        ->capture_default_str();
    add_format(cen_mul);
    cen_mul->callback([&] {
        CentralPair a(eval_at(g_expr, opt.order + 1), eval_at(f_expr, opt.order + 1));
        CentralPair b(eval_at(g2_expr, opt.order + 1), eval_at(f2_expr, opt.order + 1));
        CentralPair c = central_mul(a, b);
        emit(pair_doc(c.g(), c.f(), "g", "f", "central mul", opt.order,
                      {{"g1", g_expr}, {"f1", f_expr}, {"g2", g2_expr}, {"f2", f2_expr}}),
             opt.format);
    });

    auto* cen_inv = cmd_central->add_subcommand("inv", "Inverse in central form");
    cen_inv->add_option("--g", g_expr)->required();
    cen_inv->add_option("--f", f_expr)->required();
    cen_inv->add_option("--order", opt.order, "Series order of the result")
        ->capture_default_str();
    add_format(cen_inv);
    cen_inv->callback([&] {
        CentralPair c(eval_at(g_expr, opt.order + 1), eval_at(f_expr, opt.order + 1));
        CentralPair q = central_inv(c);
        emit(pair_doc(q.g(), q.f(), "g", "f", "central inv", opt.order,
                      {{"g", g_expr}, {"f", f_expr}}),
             opt.format);
    });

    auto* cen_ante = cmd_central->add_subcommand(
        "antecedent", "(u, v) pair whose vertical half inverts the triangle");
    cen_ante->add_option("--g", g_expr)->required();
    cen_ante->add_option("--f", f_expr)->required();
    cen_ante->add_option("--order", opt.order, "Series order of the result")
        ->capture_default_str();
    add_format(cen_ante);
    cen_ante->callback([&] {
        CentralPair c(eval_at(g_expr, opt.order + 1), eval_at(f_expr, opt.order + 1));
        RiordanPair p = vertical_antecedent(c);
        emit(pair_doc(p.u(), p.v(), "u", "v", "central antecedent", opt.order,
                      {{"g", g_expr}, {"f", f_expr}}),
             opt.format);
    });

    std::string s_lit = "0", t_lit = "0", a_lit = "0", b_lit = "0";
    auto* cen_moments = cmd_central->add_subcommand(
        "moments", "Moment sequence of the weight family (s, t; a, b)");
    cen_moments->add_option("--s", s_lit)->capture_default_str();
    cen_moments->add_option("--t", t_lit)->capture_default_str();
    cen_moments->add_option("--a", a_lit)->capture_default_str();
    cen_moments->add_option("--b", b_lit)->capture_default_str();
    cen_moments->add_option("--order", opt.order, "Highest moment index")
        ->capture_default_str();
    add_format(cen_moments);
    cen_moments->callback([&] {
        Series mu = chebyshev_moments(parse_rat_flag(s_lit, "--s"), parse_rat_flag(t_lit, "--t"),
                                      parse_rat_flag(a_lit, "--a"), parse_rat_flag(b_lit, "--b"),
                                      opt.order);
        emit(series_doc(mu, "central moments", opt.order,
                        {{"s", s_lit}, {"t", t_lit}, {"a", a_lit}, {"b", b_lit}}),
             opt.format);
    });

    // exp matrix
    auto* cmd_exp = app.add_subcommand("exp", "Exponential arrays");
    cmd_exp->require_subcommand(1);
    auto* exp_matrix = cmd_exp->add_subcommand(
        "matrix", "Triangle of [u, v] (with --u/--v) or {g, f}_e (with --g/--f)");
    auto* opt_u = exp_matrix->add_option("--u", u_expr);
    auto* opt_v = exp_matrix->add_option("--v", v_expr);
    auto* opt_g = exp_matrix->add_option("--g", g_expr);
    auto* opt_f = exp_matrix->add_option("--f", f_expr);
    exp_matrix->add_option("--rows", opt.rows, "Number of rows")->capture_default_str();
    add_format(exp_matrix);
    exp_matrix->callback([&] {
        bool uv = opt_u->count() || opt_v->count();
        bool gf = opt_g->count() || opt_f->count();
        if (uv == gf) throw UsageError("exp matrix needs either --u/--v or --g/--f");
        int order = opt.rows - 1;
        if (uv) {
            if (!opt_u->count() || !opt_v->count())
                throw UsageError("exp matrix needs both --u and --v");
            ExpRiordanPair p(eval_at(u_expr, order), eval_at(v_expr, order));
            emit(triangle_doc(exp_triangle(p, opt.rows), "exp matrix", opt.rows,
                              {{"u", u_expr}, {"v", v_expr}}),
                 opt.format);
        } else {
            if (!opt_g->count() || !opt_f->count())
                throw UsageError("exp matrix needs both --g and --f");
            ExpCentralPair c(eval_at(g_expr, order), eval_at(f_expr, order));
            emit(triangle_doc(exp_triangle(c, opt.rows), "exp matrix", opt.rows,
                              {{"g", g_expr}, {"f", f_expr}}),
                 opt.format);
        }
    });

    // verify
    std::string lhs_spec, rhs_spec;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Build two triangles and compare them entry for entry");
    cmd_verify->add_option("--lhs", lhs_spec, "Left triangle spec")->required();
    cmd_verify->add_option("--rhs", rhs_spec, "Right triangle spec")->required();
    cmd_verify->add_option("--rows", opt.rows, "Rows to compare")->capture_default_str();
    add_format(cmd_verify);
    cmd_verify->callback([&] {
        Triangle lhs = build_triangle(*SpecParser(lhs_spec).run(), opt.rows);
        Triangle rhs = build_triangle(*SpecParser(rhs_spec).run(), opt.rows);
        OutputDoc doc;
        doc.kind = OutputDoc::Kind::Boolean;
        doc.command = "verify";
        doc.order = opt.rows;
        doc.inputs = {{"lhs", lhs_spec}, {"rhs", rhs_spec}};
        doc.mismatch = first_difference(lhs, rhs);
        doc.equal = !doc.mismatch.has_value();
        emit(doc, opt.format);
        if (!doc.equal) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
