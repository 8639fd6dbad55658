#include "mcp/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mcp {

GroupSpec::GroupSpec(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw InvalidSpecError("group needs at least one cyclic factor");
    long long d = 1;
    for (int o : orders_) {
        if (o < 2) throw InvalidSpecError("cyclic order " + std::to_string(o) + " is below 2");
        d *= o;
        if (d > 256) throw InvalidSpecError("group order above 256 is not supported");
    }
    order_ = static_cast<int>(d);
    std::vector<GroupElement> all(order_);
    for (int i = 0; i < order_; ++i) all[i] = element(i);
    add_.resize(static_cast<std::size_t>(order_) * order_);
    neg_.resize(order_);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            GroupElement s;
            s.residues.resize(orders_.size());
            for (std::size_t k = 0; k < orders_.size(); ++k)
                s.residues[k] = (all[a].residues[k] + all[b].residues[k]) % orders_[k];
            add_[a * order_ + b] = index(s);
        }
        GroupElement n;
        n.residues.resize(orders_.size());
        for (std::size_t k = 0; k < orders_.size(); ++k)
            n.residues[k] = (orders_[k] - all[a].residues[k]) % orders_[k];
        neg_[a] = index(n);
    }
}

void GroupSpec::check(int index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
}

int GroupSpec::index(const GroupElement& e) const {
    if (e.residues.size() != orders_.size())
        throw InvalidSpecError("element has " + std::to_string(e.residues.size()) +
                               " residues, group has " + std::to_string(orders_.size()) +
                               " factors");
    int idx = 0, stride = 1;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        if (e.residues[k] < 0 || e.residues[k] >= orders_[k])
            throw InvalidSpecError("residue " + std::to_string(e.residues[k]) +
                                   " not reduced modulo " + std::to_string(orders_[k]));
        idx += e.residues[k] * stride;
        stride *= orders_[k];
    }
    return idx;
}

GroupElement GroupSpec::element(int index) const {
    check(index);
    GroupElement e;
    e.residues.reserve(orders_.size());
    for (int o : orders_) {
        e.residues.push_back(index % o);
        index /= o;
    }
    return e;
}

int GroupSpec::scalar_mul(long long n, int a) const {
    check(a);
    GroupElement e = element(a);
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        long long r = (n % orders_[k]) * e.residues[k] % orders_[k];
        if (r < 0) r += orders_[k];
        e.residues[k] = static_cast<int>(r);
    }
    return index(e);
}

int GroupSpec::element_order(int a) const {
    int n = 1;
    for (int x = a; x != 0; x = add(x, a)) ++n;
    return n;
}

std::string GroupSpec::name() const {
    std::string s;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        if (k) s += 'x';
        s += std::to_string(orders_[k]);
    }
    return s;
}

std::string GroupSpec::argument(int index) const {
    GroupElement e = element(index);
    std::string s;
    for (std::size_t k = 0; k < e.residues.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(e.residues[k]);
    }
    return s;
}

std::string GroupSpec::label(int index) const {
    if (orders_.size() == 1) return argument(index);
    return "(" + argument(index) + ")";
}

GroupSpec make_group(const std::vector<int>& orders) { return GroupSpec(orders); }

namespace {

std::vector<int> split_ints(const std::string& text, char sep, const char* what) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, sep)) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
            throw InvalidSpecError(std::string("malformed ") + what + " '" + text + "'");
        out.push_back(std::stoi(tok));
    }
    if (out.empty() || (!text.empty() && text.back() == sep))
        throw InvalidSpecError(std::string("malformed ") + what + " '" + text + "'");
    return out;
}

}  // namespace

GroupSpec parse_group(const std::string& text) { return GroupSpec(split_ints(text, 'x', "group")); }

GroupElement parse_element(const GroupSpec& spec, const std::string& text) {
    std::string t = text;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    GroupElement e{split_ints(t, ',', "element")};
    spec.index(e);  // validates
    return e;
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    return spec.element(spec.add(spec.index(a), spec.index(b)));
}

GroupElement neg(const GroupSpec& spec, const GroupElement& a) {
    return spec.element(spec.neg(spec.index(a)));
}

GroupElement scalar_mul(const GroupSpec& spec, long long n, const GroupElement& a) {
    return spec.element(spec.scalar_mul(n, spec.index(a)));
}

std::vector<GroupElement> elements_nonzero(const GroupSpec& spec) {
    std::vector<GroupElement> out;
    for (int i = 1; i < spec.order(); ++i) out.push_back(spec.element(i));
    return out;
}

Automorphism Automorphism::identity(const GroupSpec& spec) {
    std::vector<int> img(spec.order());
    std::iota(img.begin(), img.end(), 0);
    return Automorphism(std::move(img));
}

Automorphism Automorphism::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<int>(i);
    return Automorphism(std::move(inv));
}

Automorphism Automorphism::then(const Automorphism& next) const {
    std::vector<int> img(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) img[i] = next.image_[image_[i]];
    return Automorphism(std::move(img));
}

bool Automorphism::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != static_cast<int>(i)) return false;
    return true;
}

bool Automorphism::is_automorphism_of(const GroupSpec& spec) const {
    const int d = spec.order();
    if (static_cast<int>(image_.size()) != d || image_[0] != 0) return false;
    std::vector<bool> hit(d, false);
    for (int x : image_) {
        if (x < 0 || x >= d || hit[x]) return false;
        hit[x] = true;
    }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (image_[spec.add(a, b)] != spec.add(image_[a], image_[b])) return false;
    return true;
}

std::string scope_name(AutScope s) { return s == AutScope::full ? "full" : "componentwise"; }

AutScope parse_scope(const std::string& text) {
    if (text == "full") return AutScope::full;
    if (text == "componentwise") return AutScope::componentwise;
    throw InvalidSpecError("unknown automorphism scope '" + text + "'");
}

std::vector<Automorphism> enumerate_automorphisms(const GroupSpec& spec) {
    const auto& orders = spec.orders();
    const std::size_t k = orders.size();
    const int d = spec.order();
    // Generator i is the unit vector e_i; its candidate images are the elements killed by d_i.
    std::vector<std::vector<int>> cand(k);
    for (std::size_t i = 0; i < k; ++i)
        for (int x = 0; x < d; ++x)
            if (spec.scalar_mul(orders[i], x) == 0) cand[i].push_back(x);

    std::vector<Automorphism> out;
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
        std::vector<int> img(d);
        std::vector<bool> hit(d, false);
        bool bijective = true;
        for (int x = 0; x < d && bijective; ++x) {
            GroupElement e = spec.element(x);
            int y = 0;
            for (std::size_t i = 0; i < k; ++i) y = spec.add(y, spec.scalar_mul(e.residues[i], cand[i][pick[i]]));
            if (hit[y]) bijective = false;
            hit[y] = true;
            img[x] = y;
        }
        if (bijective) out.emplace_back(std::move(img));
        std::size_t i = 0;
        while (i < k && ++pick[i] == cand[i].size()) pick[i++] = 0;
        if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Automorphism> componentwise_automorphisms(const GroupSpec& spec) {
    const auto& orders = spec.orders();
    const std::size_t k = orders.size();
    std::vector<std::vector<int>> units(k);
    for (std::size_t i = 0; i < k; ++i)
        for (int u = 1; u < orders[i]; ++u)
            if (std::gcd(u, orders[i]) == 1) units[i].push_back(u);

    std::vector<Automorphism> out;
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
        std::vector<int> img(spec.order());
        for (int x = 0; x < spec.order(); ++x) {
            GroupElement e = spec.element(x);
            for (std::size_t i = 0; i < k; ++i) e.residues[i] = e.residues[i] * units[i][pick[i]] % orders[i];
            img[x] = spec.index(e);
        }
        out.emplace_back(std::move(img));
        std::size_t i = 0;
        while (i < k && ++pick[i] == units[i].size()) pick[i++] = 0;
        if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Automorphism> automorphisms(const GroupSpec& spec, AutScope scope) {
    return scope == AutScope::full ? enumerate_automorphisms(spec) : componentwise_automorphisms(spec);
}

std::vector<Automorphism> stabilizer(const std::vector<Automorphism>& group, int g0) {
    std::vector<Automorphism> out;
    for (const auto& phi : group)
        if (phi(g0) == g0) out.push_back(phi);
    return out;
}

std::vector<Automorphism> stabilizer(const GroupSpec& spec, const GroupElement& g0, AutScope scope) {
    return stabilizer(automorphisms(spec, scope), spec.index(g0));
}

std::vector<int> act_on_point(const Automorphism& phi, const std::vector<int>& t) {
    if (t.size() + 1 != phi.size())
        throw InvalidSpecError("point length " + std::to_string(t.size()) +
                               " does not match group order " + std::to_string(phi.size()));
    std::vector<int> r(t.size());
    for (std::size_t p = 0; p < t.size(); ++p) r[phi(static_cast<int>(p) + 1) - 1] = t[p];
    return r;
}

}  // namespace mcp
