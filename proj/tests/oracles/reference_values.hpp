#pragma once
// Generated by gen_reference.py (mpmath, 50 digits). Do not edit by hand.

namespace cplx::test::reference {

struct Point1 { double x; double value; };
struct Point2 { double a; double b; double value; };
struct Point3 { double x; double a; double b; double value; };

inline constexpr Point1 kLogGamma[] = {
    {0.001, 6.9071788853838536825},
    {0.1, 2.2527126517342059599},
    {0.5, 0.57236494292470008707},
    {1, 0.0},
    {1.5, -0.12078223763524522235},
    {2, 0.0},
    {2.5, 0.28468287047291915963},
    {3.7, 1.4280723266653879219},
    {10.5, 13.940625219403763633},
    {100.25, 360.28455963776423497},
    {1234.5, 7550.5509010778948957},
    {99999.5, 1051281.9525146744223},
    {1000000, 12815504.56914761166},
};

inline constexpr Point2 kLogBeta[] = {
    {1, 1, 0.0},
    {5.5, 195.5, -25.120534446537341459},
    {0.5, 0.5, 1.1447298858494001741},
    {2.5, 98.5, -11.209366409655539713},
    {0.1, 10000, 1.3316831145965870112},
    {5000, 7000, -8153.3893300834617182},
    {12.25, 3.5, -7.899401290669235581},
};

inline constexpr Point3 kRegIncBeta[] = {
    {0.0258, 5.5, 195.5, 0.49967030502742882514},
    {0.3, 0.5, 0.5, 0.36901011956554538276},
    {0.01, 2.5, 98.5, 0.15015453247912665476},
    {0.49, 5000, 5000, 0.022742032324574642061},
    {0.999, 3, 0.2, 0.66854148390108466875},
    {1e-5, 0.1, 50, 0.49107189314612629224},
};

// x = quantile level q here.
inline constexpr Point3 kBetaQuantile[] = {
    {0.5, 5.5, 195.5, 0.025809206706183442793},
    {0.5, 4.5, 166.5, 0.024489348825172226633},
    {0.5, 2.5, 48.5, 0.043221840908411219907},
    {0.5, 2.5, 46.5, 0.045010101475028704995},
    {0.5, 2.5, 98.5, 0.021683951606546996359},
    {0.5, 2.5, 97.5, 0.021902234683696769346},
    {0.5, 4.5, 94.5, 0.042419980930439032229},
    {0.5, 4.5, 97.5, 0.041164165834410238336},
    {0.005, 0.5, 0.5, 0.000061683759169700680546},
    {0.995, 2.5, 98.5, 0.08092470282477222184},
    {0.25, 250.5, 7225.5, 0.032081635818781447249},
};

}  // namespace cplx::test::reference
