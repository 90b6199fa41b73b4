// Prints one PASS/FAIL line per acceptance criterion; exit status is 0 only when all pass.

#include <sys/wait.h>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pentagram/suite.hpp"

using namespace pentagram;

namespace {

struct Captured {
    int status = -1;
    std::string out;
};

Captured run(const std::string& cmd) {
    Captured c;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return c;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) c.out.append(buf, got);
    int raw = pclose(p);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

/// Every exact I column of the CSV holds a single value, and there is at least one such column.
bool integrals_constant(const std::string& csv, int expect_rows, std::string& why) {
    std::stringstream ss(csv);
    std::string line;
    if (!std::getline(ss, line)) return why = "empty CSV", false;
    auto head = split(line);
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < head.size(); ++i)
        if (head[i].rfind("I_", 0) == 0 && head[i].size() > 6 && head[i].substr(head[i].size() - 6) == "_exact")
            cols.push_back(i);
    if (cols.empty()) return why = "no exact I columns", false;
    std::vector<std::string> first;
    int rows = 0;
    while (std::getline(ss, line)) {
        auto cells = split(line);
        if (cells.size() != head.size()) return why = "ragged row", false;
        std::vector<std::string> now;
        for (auto c : cols) now.push_back(cells[c]);
        if (rows == 0) first = now;
        if (now != first) return why = "I columns change at row " + std::to_string(rows), false;
        ++rows;
    }
    if (rows != expect_rows) return why = std::to_string(rows) + " rows", false;
    return true;
}

suite::Result cli_criterion(const std::string& cli) {
    suite::Result r;
    r.id = 12;
    r.name = "command line";
    auto t0 = std::chrono::steady_clock::now();
    auto v = run(cli + " verify");
    r.expect(v.status == 0, "verify exit " + std::to_string(v.status));
    auto o = run(cli + " orbit --k 3 --n 5 --steps 10 --exact-csv");
    std::string why;
    r.expect(o.status == 0 && integrals_constant(o.out, 11, why), "orbit CSV: exit " + std::to_string(o.status) + " " + why);
    auto f = run(cli + " verify --inject-fault d-sign");
    r.expect(f.status == 1, "fault injection exit " + std::to_string(f.status));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : PENTAGRAM_CLI_PATH;
    suite::Config cfg;
    std::vector<suite::Result> results;
    for (const auto& c : suite::criteria()) results.push_back(c(cfg));
    results.push_back(cli_criterion(cli));
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name << "  (" << r.checks
                  << " checks, " << std::fixed << std::setprecision(2) << r.seconds << " s)";
        if (!r.pass && !r.failures.empty()) std::cout << "  first failure: " << r.failures.front();
        std::cout << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
