#include "twistset/universe.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace twistset {

namespace {

// (1 + domain_size)^count, saturating at UINT64_MAX.
std::uint64_t level_count(std::uint64_t base, std::uint64_t count, bool& overflow) {
    overflow = false;
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (result > UINT64_MAX / base) {
            overflow = true;
            return UINT64_MAX;
        }
        result *= base;
    }
    return result;
}

}  // namespace

elem_id UniverseStore::empty_element() { return make_element({}); }

elem_id UniverseStore::make_element(std::vector<std::pair<elem_id, TwistVal>> keys) {
    std::sort(keys.begin(), keys.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    int rank = 1;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto& [id, val] = keys[i];
        if (id >= elems_.size())
            throw std::invalid_argument("make_element: unknown key id " + std::to_string(id));
        if (i > 0 && keys[i - 1].first == id)
            throw std::invalid_argument("make_element: duplicate key id " + std::to_string(id));
        if (val.z1.n != alg_.n || val.z2.n != alg_.n)
            throw std::invalid_argument("make_element: value from a different algebra");
        rank = std::max(rank, elems_[id].rank + 1);
    }
    auto it = intern_.find(keys);
    if (it != intern_.end()) return it->second;
    elem_id id = static_cast<elem_id>(elems_.size());
    intern_.emplace(keys, id);
    elems_.push_back(ElemEntry{std::move(keys), rank});
    return id;
}

const ElemEntry& UniverseStore::element(elem_id id) const {
    if (id >= elems_.size())
        throw std::out_of_range("element: unknown id " + std::to_string(id));
    return elems_[id];
}

int UniverseStore::rank(elem_id id) const { return element(id).rank; }

std::vector<elem_id> enumerate_rank(UniverseStore& store, int max_rank,
                                    std::uint64_t budget) {
    if (max_rank < 0) throw std::invalid_argument("enumerate_rank: negative rank");
    if (budget < 1) throw std::invalid_argument("enumerate_rank: budget must be >= 1");

    auto collect = [&store](int up_to) {
        std::vector<elem_id> ids;
        for (elem_id id = 0; id < store.size(); ++id)
            if (store.rank(id) <= up_to) ids.push_back(id);
        return ids;
    };

    if (max_rank == 0) return {};
    store.empty_element();

    const std::vector<TwistVal> domain = twist_domain(store.algebra());
    const std::uint64_t base = 1 + static_cast<std::uint64_t>(domain.size());

    for (int level = 2; level <= max_rank; ++level) {
        std::vector<elem_id> prev = collect(level - 1);

        bool overflow = false;
        std::uint64_t needed = level_count(base, prev.size(), overflow);
        if (overflow || needed > budget)
            throw budget_error("enumerate_rank: level " + std::to_string(level) +
                                   " needs " +
                                   (overflow ? std::string("more than 2^64")
                                             : std::to_string(needed)) +
                                   " elements (budget " + std::to_string(budget) + ")",
                               needed, overflow);

        // Odometer over partial maps prev -> domain: digit 0 means "absent",
        // digit d > 0 means value domain[d-1].  The first digit varies fastest.
        std::vector<std::size_t> digit(prev.size(), 0);
        for (;;) {
            std::size_t pos = 0;
            while (pos < digit.size() && digit[pos] == domain.size()) {
                digit[pos] = 0;
                ++pos;
            }
            if (pos == digit.size()) break;
            ++digit[pos];

            std::vector<std::pair<elem_id, TwistVal>> keys;
            for (std::size_t j = 0; j < digit.size(); ++j)
                if (digit[j] > 0) keys.emplace_back(prev[j], domain[digit[j] - 1]);
            store.make_element(std::move(keys));
        }
    }
    return collect(max_rank);
}

bool hf_member(std::uint64_t a, std::uint64_t b) {
    return a < 64 && ((b >> a) & 1u);
}

int hf_rank(std::uint64_t code) {
    int rank = 0;
    for (std::uint64_t i = 0; i < 64; ++i)
        if ((code >> i) & 1u) rank = std::max(rank, hf_rank(i) + 1);
    return rank;
}

elem_id check_name(UniverseStore& store, std::uint64_t code) {
    const TwistVal one = tv_one(store.algebra());
    std::vector<std::pair<elem_id, TwistVal>> keys;
    for (std::uint64_t i = 0; i < 64; ++i)
        if ((code >> i) & 1u) keys.emplace_back(check_name(store, i), one);
    return store.make_element(std::move(keys));
}

std::string dump_store(const UniverseStore& store) {
    std::string out;
    char buf[64];
    for (elem_id id = 0; id < store.size(); ++id) {
        const ElemEntry& e = store.element(id);
        std::snprintf(buf, sizeof buf, "%u %d {", id, e.rank);
        out += buf;
        for (std::size_t i = 0; i < e.keys.size(); ++i) {
            if (i > 0) out += ", ";
            std::snprintf(buf, sizeof buf, "%u:(%x,%x)", e.keys[i].first,
                          e.keys[i].second.z1.mask, e.keys[i].second.z2.mask);
            out += buf;
        }
        out += "}\n";
    }
    return out;
}

namespace {

// Cursor over one dump line; reports 1-based columns on errors.
struct LineCursor {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("store line " + std::to_string(line) + ": " + what, line,
                          static_cast<int>(pos) + 1);
    }
    bool at_end() const { return pos >= s.size(); }
    char peek() const { return at_end() ? '\0' : s[pos]; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    void skip_spaces() {
        while (peek() == ' ') ++pos;
    }
    std::uint64_t number(int base) {
        const char* digits = "0123456789abcdef";
        std::uint64_t value = 0;
        std::size_t start = pos;
        while (!at_end()) {
            const char* d = std::strchr(digits, std::tolower(peek()));
            if (d == nullptr || d - digits >= base) break;
            value = value * base + static_cast<std::uint64_t>(d - digits);
            if (value > UINT32_MAX) fail("number out of range");
            ++pos;
        }
        if (pos == start) fail(base == 16 ? "expected a hex mask" : "expected a number");
        return value;
    }
};

}  // namespace

UniverseStore load_store(const std::string& text, BoolAlg alg) {
    UniverseStore store(alg);
    const std::uint32_t full = alg.full_mask();

    int line_no = 0;
    std::size_t begin = 0;
    while (begin < text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;
        if (line.empty()) continue;

        LineCursor cur{line, line_no};
        std::uint64_t id = cur.number(10);
        if (id != store.size()) cur.fail("ids must be sequential from 0");
        cur.expect(' ');
        std::uint64_t rank = cur.number(10);
        cur.expect(' ');
        cur.expect('{');

        std::vector<std::pair<elem_id, TwistVal>> keys;
        if (cur.peek() != '}') {
            for (;;) {
                std::uint64_t key = cur.number(10);
                if (!keys.empty() && key <= keys.back().first)
                    cur.fail("keys must be strictly ascending");
                if (key >= id) cur.fail("key refers to an element not yet defined");
                cur.expect(':');
                cur.expect('(');
                std::uint64_t m1 = cur.number(16);
                cur.expect(',');
                std::uint64_t m2 = cur.number(16);
                cur.expect(')');
                if (m1 > full || m2 > full) cur.fail("mask does not fit the algebra");
                if ((m1 | m2) != full) cur.fail("coordinates must join to the top mask");
                keys.emplace_back(static_cast<elem_id>(key),
                                  make_twist(ba_make(alg, static_cast<std::uint32_t>(m1)),
                                             ba_make(alg, static_cast<std::uint32_t>(m2))));
                if (cur.peek() != ',') break;
                cur.expect(',');
                cur.expect(' ');
            }
        }
        cur.expect('}');
        cur.skip_spaces();
        if (!cur.at_end()) cur.fail("trailing characters");

        elem_id made = store.make_element(std::move(keys));
        if (made != id) cur.fail("duplicate element body");
        if (store.rank(made) != static_cast<int>(rank))
            cur.fail("rank " + std::to_string(rank) + " does not match computed rank " +
                     std::to_string(store.rank(made)));
    }
    return store;
}

}  // namespace twistset
