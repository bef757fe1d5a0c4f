#include "hahn/session.hpp"

#include <fstream>
#include <sstream>

#include "hahn/parser.hpp"

namespace hahn {

ContextPtr make_transseries_context(const Rational& c) {
    if (c == -1) throw CMinusOne();
    Rational rate = Rational(-1) / (c + 1);
    GeneratorDecl E{"E", 1, {GeneratorDisplay::Kind::ExpRate, rate, ""}};
    GeneratorDecl X{"X", 1, {GeneratorDisplay::Kind::Inverse, 0, "x"}};
    auto ctx = GeneratorContext::create({E, X});
    ctx->set_logderiv(0, Series::constant(ctx, rate));
    ctx->set_logderiv(1, -Series::generator(ctx, 1));
    return ctx;
}

Session make_default_session(const Rational& c) {
    if (c == -1) throw CMinusOne();
    Rational rate = Rational(-1) / (c + 1);
    GeneratorDecl E{"E", 1, {GeneratorDisplay::Kind::ExpRate, rate, ""}};
    GeneratorDecl X{"X", 1, {GeneratorDisplay::Kind::Inverse, 0, "x"}};
    GeneratorDecl T{"t", 1, {}};
    auto ctx = GeneratorContext::create({E, X, T});
    ctx->set_logderiv(0, Series::constant(ctx, rate));
    ctx->set_logderiv(1, -Series::generator(ctx, 1));
    ctx->set_logderiv(2, Series(ctx));
    Session s;
    s.ctx = ctx;
    return s;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

} // namespace

Session load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionFailed("cannot open config file '" + path + "'");
    Session s;
    std::vector<GeneratorDecl> decls;
    std::vector<std::string> logderiv_exprs;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto words = split_ws(line);
        if (words.empty()) continue;
        if (words[0] == "depth" && words.size() == 2) {
            s.depth = parse_rational(words[1]);
            if (s.depth <= 0) throw PreconditionFailed("depth must be positive");
        } else if (words[0] == "output" && words.size() == 2) {
            if (words[1] == "json")
                s.json_output = true;
            else if (words[1] == "text")
                s.json_output = false;
            else
                throw PreconditionFailed("output must be text or json");
        } else if (words[0] == "generator" && words.size() >= 3) {
            GeneratorDecl d;
            d.name = words[1];
            std::string ld;
            for (std::size_t i = 2; i < words.size(); ++i) {
                const std::string& w = words[i];
                if (w.rfind("weight=", 0) == 0)
                    d.weight = parse_rational(w.substr(7));
                else if (w.rfind("logderiv=", 0) == 0)
                    ld = w.substr(9);
                else if (w.rfind("display=exp:", 0) == 0)
                    d.display = {GeneratorDisplay::Kind::ExpRate, parse_rational(w.substr(12)), ""};
                else if (w.rfind("display=inv:", 0) == 0)
                    d.display = {GeneratorDisplay::Kind::Inverse, 0, w.substr(12)};
                else
                    throw PreconditionFailed("bad generator attribute '" + w + "'");
            }
            decls.push_back(std::move(d));
            logderiv_exprs.push_back(std::move(ld));
        } else {
            throw PreconditionFailed("bad config line: " + line);
        }
    }
    if (decls.empty()) throw PreconditionFailed("config declares no generators");
    auto ctx = GeneratorContext::create(std::move(decls));
    for (std::size_t i = 0; i < logderiv_exprs.size(); ++i)
        if (!logderiv_exprs[i].empty())
            ctx->set_logderiv(i, eval_expr(logderiv_exprs[i], ctx, s.depth).as_exact());
    s.ctx = ctx;
    return s;
}

} // namespace hahn
