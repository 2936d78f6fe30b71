#include "sumclique/group.hpp"

#include <fstream>
#include <sstream>

namespace sumclique {

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
    if (n < 1) throw PreconditionError("cyclic group order must be >= 1");
    if (n > (std::uint64_t(1) << kMaxOrderLog2))
        throw PreconditionError("group order exceeds 2^26 cap");
    GroupSpec g;
    g.kind = Kind::Cyclic;
    g.order = static_cast<std::uint32_t>(n);
    g.dim = 0;
    return g;
}

GroupSpec GroupSpec::boolean(std::uint32_t dim) {
    if (dim > kMaxOrderLog2) throw PreconditionError("boolean group dimension exceeds 26 cap");
    GroupSpec g;
    g.kind = Kind::Boolean;
    g.order = std::uint32_t(1) << dim;
    g.dim = dim;
    return g;
}

std::string GroupSpec::name() const {
    if (is_boolean()) return "Z_2^" + std::to_string(dim);
    return "Z_" + std::to_string(order);
}

std::vector<Element> GroupSet::elements() const {
    std::vector<Element> out;
    out.reserve(card());
    bits.for_each_set([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
    return out;
}

GroupSet full_set(const GroupSpec& g) {
    GroupSet s(g);
    for (Element e = 0; e < g.order; ++e) s.bits.set(e);
    return s;
}

GroupSet empty_set(const GroupSpec& g) { return GroupSet(g); }

GroupSet make_set(const GroupSpec& g, const std::vector<Element>& elems) {
    GroupSet s(g);
    for (Element e : elems) {
        require_element(g, e);
        if (s.bits.test(e)) throw PreconditionError("duplicate element " + std::to_string(e));
        s.bits.set(e);
    }
    return s;
}

namespace {

Element parse_element(const GroupSpec& g, const std::string& tok) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        throw PreconditionError("malformed element token: '" + tok + "'");
    }
    if (pos != tok.size()) throw PreconditionError("malformed element token: '" + tok + "'");
    require_element(g, v);
    return static_cast<Element>(v);
}

}  // namespace

GroupSet parse_set(const GroupSpec& g, const std::string& text) {
    GroupSet s(g);
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        Element e = parse_element(g, tok);
        if (s.bits.test(e)) throw PreconditionError("duplicate element " + std::to_string(e));
        s.bits.set(e);
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            flush();
        else
            tok.push_back(c);
    }
    flush();
    return s;
}

GroupSet load_set_file(const GroupSpec& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open set file: " + path);
    GroupSet s(g);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t");
        std::string tok = line.substr(start, end - start + 1);
        Element e;
        try {
            e = parse_element(g, tok);
        } catch (const PreconditionError& ex) {
            throw PreconditionError(path + ":" + std::to_string(lineno) + ": " + ex.what());
        }
        if (s.bits.test(e))
            throw PreconditionError(path + ":" + std::to_string(lineno) + ": duplicate element " + tok);
        s.bits.set(e);
    }
    return s;
}

void save_set_file(const GroupSet& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot open output file: " + path);
    out << "# " << s.group.name() << ", " << s.card() << " elements\n";
    s.bits.for_each_set([&](std::size_t i) { out << i << "\n"; });
    if (!out) throw PreconditionError("write failed: " + path);
}

GroupSet arithmetic_progression(const GroupSpec& g, Element start, Element step, std::uint32_t length) {
    require_element(g, start);
    require_element(g, step);
    if (length > g.order) throw PreconditionError("progression longer than group order");
    GroupSet s(g);
    Element cur = start;
    for (std::uint32_t i = 0; i < length; ++i) {
        if (s.bits.test(cur)) throw PreconditionError("progression revisits an element; reduce length");
        s.bits.set(cur);
        cur = add_raw(g, cur, step);
    }
    return s;
}

}  // namespace sumclique
