#include "coh1/sweep.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

// times the serial reference against the parallel sweep kernel and verifies
// they produce identical records

int main(int argc, char** argv) {
    using clock = std::chrono::steady_clock;
    coh1::sweep::SweepBounds b;
    if (argc > 1) b.slope = std::atoi(argv[1]);
    if (argc > 2) b.b = std::atoi(argv[2]);
    if (argc > 3) b.mn = std::atoi(argv[3]);

    for (const char* family : {"N7A", "N7E"}) {
        auto diagrams = coh1::sweep::enumerate_diagrams(family, b);

        auto t0 = clock::now();
        auto serial = coh1::sweep::run_serial(diagrams);
        auto t1 = clock::now();
        auto parallel = coh1::sweep::run_parallel(diagrams);
        auto t2 = clock::now();

        bool same = serial.size() == parallel.size();
        for (size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].h4_formula == parallel[i].h4_formula &&
                   serial[i].h4_oracle == parallel[i].h4_oracle &&
                   serial[i].agree == parallel[i].agree;

        auto ms = [](auto d) {
            return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
        };
        std::cout << family << ": " << diagrams.size() << " diagrams, serial " << ms(t1 - t0)
                  << " ms, parallel " << ms(t2 - t1) << " ms, records "
                  << (same ? "identical" : "DIFFER") << ", disagreements "
                  << coh1::sweep::count_disagreements(serial) << "\n";
        if (!same) return 1;
    }
    return 0;
}
