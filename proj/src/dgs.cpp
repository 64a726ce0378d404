#include "walkmat/dgs.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <thread>

namespace walkmat {

FStarReport fstar_check(const Graph& g) {
    FStarReport rep;
    rep.n = g.order();
    rep.n_even = rep.n % 2 == 0;
    rep.walk_det = walk_det(g);
    rep.a0 = a0(g);
    rep.member = rep.n_even && abs(rep.walk_det) == pow2(rep.n / 2) && abs(rep.a0) == 1;
    return rep;
}

std::string to_string(WangStatus s) {
    switch (s) {
        case WangStatus::holds: return "holds";
        case WangStatus::fails: return "fails";
        default: return "unknown";
    }
}

namespace {

// Pollard rho (Brent's cycle variant). Returns a nontrivial factor of the
// odd composite n, or nullopt once the iteration budget is spent.
std::optional<Int> pollard_rho(const Int& n, std::uint64_t& budget) {
    if (divisible(n, 2)) return Int(2);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(n); // deterministic per input
    while (budget > 0) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = y, d = 1, q = 1, ys = y;
        const unsigned long step = 128;
        unsigned long r = 1;
        while (d == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                --budget;
            }
            unsigned long k = 0;
            while (k < r && d == 1 && budget > 0) {
                ys = y;
                const unsigned long lim = std::min(step, r - k);
                for (unsigned long i = 0; i < lim && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                    --budget;
                }
                d = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != 1 && d != n) return d;
        // retry with fresh parameters until the budget runs out
    }
    return std::nullopt;
}

bool probably_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

struct Factorization {
    std::map<Int, unsigned> exponents;
    bool complete = true;
};

Factorization factor(Int n, std::uint64_t budget) {
    Factorization out;
    // trial division
    for (unsigned long p = 2; p <= 1'000'000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (divisible(n, Int(p))) {
            ++out.exponents[Int(p)];
            n /= static_cast<long>(p);
        }
    }
    std::vector<Int> pending;
    if (n > 1) pending.push_back(n);
    while (!pending.empty()) {
        Int c = pending.back();
        pending.pop_back();
        if (probably_prime(c)) {
            ++out.exponents[c];
            continue;
        }
        auto f = pollard_rho(c, budget);
        if (!f) {
            out.complete = false;
            // a perfect-power remainder still proves a repeated factor
            if (mpz_perfect_power_p(c.get_mpz_t()) != 0) out.exponents[c] = 2;
            continue;
        }
        pending.push_back(*f);
        pending.push_back(c / *f);
    }
    return out;
}

} // namespace

WangStatus wang_classify(const Int& d, std::uint64_t factor_budget) {
    if (d == 0) return WangStatus::fails; // zero is not odd
    Int ad = abs(d);
    if (divisible(ad, 2)) return WangStatus::fails;
    if (ad == 1) return WangStatus::holds;

    const Factorization f = factor(ad, factor_budget);
    for (const auto& [p, e] : f.exponents)
        if (e >= 2) return WangStatus::fails;
    return f.complete ? WangStatus::holds : WangStatus::unknown;
}

WangStatus wang_condition(const Graph& g, std::uint64_t factor_budget) {
    const Int det = walk_det(g);
    const Int modulus = pow2(g.order() / 2);
    // det W is always a multiple of 2^floor(n/2); guard anyway.
    if (!divisible(det, modulus)) return WangStatus::fails;
    return wang_classify(det / modulus, factor_budget);
}

Certificate verify_constant_term_preservation(const Graph& g, std::size_t m) {
    if (m < 2)
        throw DomainError("verify_constant_term_preservation: m must be >= 2");
    const auto start = std::chrono::steady_clock::now();

    Certificate cert;
    cert.identity = "constant_term";
    cert.params = {{"graph6", graph6_encode(g)}, {"m", m}};

    const Int base = a0(g);
    if (abs(base) != 1) {
        cert.params["status"] = "skipped";
        cert.params["a0"] = dec(base);
        cert.lhs = json(nullptr);
        cert.rhs = json(nullptr);
        cert.pass = true; // skipped checks do not fail batches
        return cert;
    }
    cert.params["status"] = "ok";

    const Int product_a0 = a0(rooted_product_path(g, m));
    cert.lhs = dec(abs(product_a0));
    cert.rhs = "1";
    cert.pass = abs(product_a0) == 1;
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return cert;
}

json FamilyRecord::to_json() const {
    json members_json = json::array();
    for (const auto& [g6, rep] : members) {
        json entry = rep.to_json();
        entry["graph6"] = g6;
        members_json.push_back(std::move(entry));
    }
    json out{{"seed", seed}, {"depths", depths}, {"members", members_json}};
    if (counterexample) out["counterexample"] = counterexample->to_json();
    return out;
}

FamilyRecord grow_family(const Graph& seed, const std::vector<std::size_t>& depths,
                         std::size_t max_vertices) {
    const FStarReport seed_report = fstar_check(seed);
    if (!seed_report.member)
        throw DomainError("grow_family: seed graph is not a family member");

    FamilyRecord rec;
    rec.seed = graph6_encode(seed);
    rec.depths = depths;

    Graph current = seed;
    for (std::size_t step = 0; step < depths.size(); ++step) {
        const std::size_t m = depths[step];
        if (m < 2)
            throw DomainError("grow_family: every depth must be >= 2");
        if (current.order() * m > max_vertices)
            throw DomainError("grow_family: vertex cap exceeded");
        current = rooted_product_path(current, m);
        FStarReport rep = fstar_check(current);
        const bool member = rep.member;
        rec.members.emplace_back(graph6_encode(current), std::move(rep));
        if (!member) {
            // Closure violated: emit the counterexample and stop.
            const FStarReport& bad = rec.members.back().second;
            Certificate cert;
            cert.identity = "fstar_closure";
            cert.params = {{"seed", rec.seed},
                           {"step", step + 1},
                           {"m", m},
                           {"graph6", rec.members.back().first},
                           {"a0", dec(bad.a0)}};
            cert.lhs = dec(abs(bad.walk_det));
            cert.rhs = dec(pow2(bad.n / 2));
            cert.pass = false;
            rec.counterexample = std::move(cert);
            break;
        }
    }
    return rec;
}

json ScanEntry::to_json() const {
    json out{{"line", line_no}, {"graph6", graph6}};
    if (report) {
        json rep = report->to_json();
        out.update(rep);
    } else {
        out["error"] = error;
    }
    return out;
}

std::vector<ScanEntry> scan_corpus(const std::vector<std::string>& lines, unsigned workers) {
    // Collect nonempty lines first so entries stay in input order.
    std::vector<std::pair<std::size_t, std::string_view>> work;
    work.reserve(lines.size());
    for (std::size_t k = 0; k < lines.size(); ++k) {
        std::string_view sv = lines[k];
        while (!sv.empty() && (sv.back() == '\n' || sv.back() == '\r')) sv.remove_suffix(1);
        if (!sv.empty()) work.emplace_back(k + 1, sv);
    }

    std::vector<ScanEntry> entries(work.size());
    const auto run = [&](std::size_t idx) {
        auto [line_no, sv] = work[idx];
        ScanEntry& e = entries[idx];
        e.line_no = line_no;
        e.graph6 = std::string(sv);
        try {
            e.report = fstar_check(graph6_decode(sv));
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
    };

    if (workers <= 1 || work.size() <= 1) {
        for (std::size_t i = 0; i < work.size(); ++i) run(i);
        return entries;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::size_t>(workers, work.size());
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1))
                run(i);
        });
    for (auto& th : pool) th.join();
    return entries;
}

} // namespace walkmat
