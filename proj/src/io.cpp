#include "tdpcc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tdpcc {

namespace {

// Tokenizer that strips '#' comments and remembers line numbers for errors.
class Tokens {
  public:
    explicit Tokens(std::istream& in) : in_(in) {}

    bool next(std::string& tok) {
        if (have_peek_) {
            have_peek_ = false;
            tok = peek_;
            return true;
        }
        while (true) {
            if (pos_ >= line_.size()) {
                if (!std::getline(in_, raw_)) return false;
                ++lineno_;
                auto hash = raw_.find('#');
                line_ = hash == std::string::npos ? raw_ : raw_.substr(0, hash);
                pos_ = 0;
            }
            while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
            if (pos_ >= line_.size()) continue;
            std::size_t start = pos_;
            while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
            tok = line_.substr(start, pos_ - start);
            return true;
        }
    }

    std::string require(const char* what) {
        std::string tok;
        if (!next(tok)) fail(std::string("unexpected end of file, expected ") + what);
        return tok;
    }

    long long require_int(const char* what) {
        std::string tok = require(what);
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            fail(std::string("expected integer for ") + what + ", got '" + tok + "'");
        }
        return 0;  // unreachable
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("parse error on line " + std::to_string(lineno_) + ": " + msg);
    }

    bool peek(std::string& tok) {
        if (!have_peek_) have_peek_ = next(peek_);
        if (!have_peek_) return false;
        tok = peek_;
        return true;
    }
    void consume_peek() { have_peek_ = false; }

  private:
    std::istream& in_;
    std::string raw_, line_;
    std::size_t pos_ = 0;
    int lineno_ = 0;
    bool have_peek_ = false;
    std::string peek_;
};

}  // namespace

Graph read_graph(std::istream& in) {
    Tokens t(in);
    std::string tok = t.require("'p' header");
    if (tok != "p") t.fail("expected 'p <n> <m>' header, got '" + tok + "'");
    long long n = t.require_int("vertex count");
    long long m = t.require_int("edge count");
    if (n < 0 || m < 0) t.fail("negative count in header");

    std::vector<Edge> edges;
    std::vector<long long> weights;
    bool any_weighted = false;
    for (long long i = 0; i < m; ++i) {
        tok = t.require("'e' edge line");
        if (tok != "e") t.fail("expected 'e <u> <v> [w]', got '" + tok + "'");
        long long u = t.require_int("edge endpoint");
        long long v = t.require_int("edge endpoint");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        long long w = 1;
        std::string la;
        if (t.peek(la) && la != "e") {
            t.consume_peek();
            try {
                std::size_t used = 0;
                w = std::stoll(la, &used);
                if (used != la.size()) throw std::invalid_argument(la);
            } catch (const std::exception&) {
                t.fail("expected edge weight, got '" + la + "'");
            }
            any_weighted = true;
        }
        weights.push_back(w);
    }
    std::string extra;
    if (t.peek(extra)) t.fail("trailing content '" + extra + "' after " + std::to_string(m) + " edges");
    try {
        return Graph(static_cast<int>(n), std::move(edges),
                     any_weighted ? std::move(weights) : std::vector<long long>{});
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid graph: ") + e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.n << " " << g.m() << "\n";
    for (int i = 0; i < g.m(); ++i) {
        out << "e " << g.edges[i].u << " " << g.edges[i].v;
        if (g.weighted()) out << " " << g.weights[i];
        out << "\n";
    }
}

EliminationForest read_forest(std::istream& in) {
    Tokens t(in);
    std::string tok = t.require("'t' header");
    if (tok != "t") t.fail("expected 't <n>' header, got '" + tok + "'");
    long long n = t.require_int("vertex count");
    if (n < 0) t.fail("negative vertex count");
    std::vector<Vertex> parent(n);
    for (long long v = 0; v < n; ++v) {
        long long p = t.require_int("parent entry");
        if (p < 0 || p > n) t.fail("parent of vertex " + std::to_string(v + 1) + " out of range");
        parent[v] = static_cast<Vertex>(p);
    }
    std::string extra;
    if (t.peek(extra)) t.fail("trailing content '" + extra + "'");
    return EliminationForest{std::move(parent)};
}

EliminationForest read_forest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open forest file '" + path + "'");
    return read_forest(in);
}

void write_forest(std::ostream& out, const EliminationForest& f) {
    out << "t " << f.n() << "\n";
    for (Vertex p : f.parent) out << p << "\n";
}

}  // namespace tdpcc
