#pragma once
// Generated by generate_reference.py; do not edit by hand.

#include <array>
#include <complex>

namespace oracle {

struct HankelRef { double nu; std::complex<double> z, h1, h2; };
inline const HankelRef kHankel[] = {
    {0.25, {1.0, 0.0}, {7.5223133334079006e-1, -1.9442175367716439e-1}, {7.5223133334079006e-1, 1.9442175367716439e-1}},
    {0.25, {5.0000000000000003e-2, 2.0e-2}, {1.3016173203169803e-1, -2.3469568769772815}, {7.5927968720439639e-1, 2.4314634807911302}},
    {0.25, {2.0, 1.0}, {1.6284179547154973e-1, 1.0197435039944525e-1}, {7.7710847831110574e-1, -1.2423802861313177}},
    {0.25, {-3.0, 4.0}, {3.438834466649328e-3, 5.4473685547382456e-3}, {-1.9709112088219592e+1, 1.6523803178049726}},
    {0.25, {7.0, -2.0}, {2.0692698933663667, -7.2007332016433661e-1}, {3.2613239397398155e-2, 2.2905173412883111e-2}},
    {0.25, {1.5e+1, 1.0e+1}, {4.8972002657815253e-6, 6.9554257975796038e-6}, {1.0676493982328763e+2, -4.1494954591234846e+3}},
    {0.25, {-1.2e+1, 5.0e-1}, {-7.6846136096058819e-2, -1.164875128668335e-1}, {1.823755954255297e-1, -1.1455126167319925e-1}},
    {0.25, {3.0e+1, 5.0}, {-8.7216732521331381e-4, -4.3425829872507777e-4}, {-1.7394880839355679e+1, 1.2605440659399643e+1}},
    {0.25, {5.0e-1, 4.0e+1}, {6.0569690488019004e-20, -5.3125624497555445e-19}, {2.9613062813105273e+16, -3.0017650671817277e+15}},
    {0.5, {1.0, 0.0}, {6.7139670714180309e-1, -4.3109886801837608e-1}, {6.7139670714180309e-1, 4.3109886801837608e-1}},
    {0.5, {5.0000000000000003e-2, 2.0e-2}, {-4.7113205044057053e-1, -3.3370990734117846}, {8.3465983502017805e-1, 3.4069824482988468}},
    {0.5, {2.0, 1.0}, {1.9248095807675852e-1, 3.8493050568684813e-2}, {1.1449016354152539, -8.9045021769569504e-1}},
    {0.5, {-3.0, 4.0}, {5.3745483323311747e-3, 3.7184215180721152e-3}, {-1.848034832559057e+1, -6.166367228312593}},
    {0.5, {7.0, -2.0}, {1.6501523922400086, -1.4322749496513146}, {2.1853942890809658e-2, 3.3526747499380593e-2}},
    {0.5, {1.5e+1, 1.0e+1}, {7.1880352728249176e-6, 4.5954660646588197e-6}, {1.664941855518799e+3, -3.7895591007853817e+3}},
    {0.5, {-1.2e+1, 5.0e-1}, {-1.1625133774158401e-1, -7.7364833785144193e-2}, {3.2448482611796247e-1, -1.969616931693681e-1}},
    {0.5, {3.0e+1, 5.0}, {-9.7229103180906536e-4, -7.0414940241481345e-5}, {-2.0869764029657446e+1, 5.0506802851084805}},
    {0.5, {5.0e-1, 4.0e+1}, {-1.4767060894090039e-19, -5.1519119977002411e-19}, {2.844030373976304e+16, 8.5380137945869867e+15}},
    {0.75, {1.0, 0.0}, {5.5865249320489175e-1, -6.2186941744297464e-1}, {5.5865249320489175e-1, 6.2186941744297464e-1}},
    {0.75, {5.0000000000000003e-2, 2.0e-2}, {-1.5701046879594262, -5.6648104285396524}, {1.7088721272248441, 5.7054800725267246}},
    {0.75, {2.0, 1.0}, {2.0135106219559987e-1, -2.9293045434052984e-2}, {1.344662325701164, -4.7368870563190156e-1}},
    {0.75, {-3.0, 4.0}, {6.565713465003009e-3, 1.3058119818943097e-3}, {-1.4070219082146846e+1, -1.2760375448332578e+1}},
    {0.75, {7.0, -2.0}, {1.0131666356087331, -1.924803818232748}, {8.193317690850081e-3, 3.9459850645519275e-2}},
    {0.75, {1.5e+1, 1.0e+1}, {8.4299374530698858e-6, 1.5612262928722828e-6}, {2.9531124493910368e+3, -2.8725509841204931e+3}},
    {0.75, {-1.2e+1, 5.0e-1}, {-1.3749274212757961e-1, -2.5244053220896314e-2}, {5.3861472922099263e-1, -1.6516038287503678e-1}},
    {0.75, {3.0e+1, 5.0}, {-9.2761737036927507e-4, 3.0263888708218033e-4}, {-2.1214388726260109e+1, -3.2097647804678008}},
    {0.75, {5.0e-1, 4.0e+1}, {-3.3485436865567967e-19, -4.2110085825954827e-19}, {2.291816264593812e+16, 1.8696473770807748e+16}},
    {1, {1.0, 0.0}, {4.4005058574493352e-1, -7.8121282130028872e-1}, {4.4005058574493352e-1, 7.8121282130028872e-1}},
    {1, {5.0000000000000003e-2, 2.0e-2}, {-4.3490443050535139, -1.1024921310937095e+1}, {4.3990361792854113, 1.1044903563167238e+1}},
    {1, {2.0, 1.0}, {1.9121655078657474e-1, -9.6248131988248558e-2}, {1.3900302343202819, -6.361725634730355e-2}},
    {1, {-3.0, 4.0}, {6.7578422929059205e-3, -1.5041895936947337e-3}, {-7.3149784051214348, -1.680470432357248e+1}},
    {1, {7.0, -2.0}, {2.6222049393327372e-1, -2.1454305469132109}, {-6.4959368525225405e-3, 4.0177649980261424e-2}},
    {1, {1.5e+1, 1.0e+1}, {8.4604813342078726e-6, -1.7131276679343635e-6}, {3.7865111086779751e+3, -1.5532788707125427e+3}},
    {1, {-1.2e+1, 5.0e-1}, {-1.3633983778581534e-1, 3.1808472259209536e-2}, {6.3840367703939962e-1, 3.8017091667040637e-2}},
    {1, {3.0e+1, 5.0}, {-7.4661389850276298e-4, 6.3015598339111929e-4}, {-1.8430061191926827e+1, -1.0940858812729133e+1}},
    {1, {5.0e-1, 4.0e+1}, {-4.7304401076653032e-19, -2.6234772652747057e-19}, {1.3943189594633346e+16, 2.589889026676974e+16}},
};

struct MRef { std::complex<double> lambda, m; };
inline const MRef kQ0[] = {
    {{0.0, 1.0}, {4.7533355319319348e-1, 1.1793680760755627}},
    {{1.0, 1.0}, {-1.0116752998475678e-1, 7.9101181079009021e-1}},
    {{-1.0, 5.0e-1}, {1.2449694626238946, 4.4380339679089398e-1}},
    {{3.0, 2.0000000000000001e-1}, {-5.7995003278187323e-2, 3.4226159205190503e-1}},
    {{-1.0e-2, 1.0e-3}, {9.0698088818989366e+1, 8.8550959799673154}},
    {{0.0, 1.0e-4}, {2.7318786142172914e+1, 8.7782871136116367e+3}},
    {{1.0e+1, 1.0e+1}, {9.6170772260526843e-2, 2.4087081915560465e-1}},
    {{-5.0, 2.0}, {4.5929195419192415e-1, 1.0458866253448773e-1}},
    {{2.9999999999999999e-1, -6.9999999999999996e-1}, {4.5400555762086346e-3, -1.458834631200906}},
    {{-2.0, -1.0}, {7.7389142626863593e-1, -2.4707704333439062e-1}},
};
inline const MRef kA1[] = {
    {{0.0, 1.0}, {8.5974202306435003e-1, 6.4930192457371526e-1}},
    {{1.0, 1.0}, {3.6429155486810484e-1, 9.9410281770367195e-1}},
    {{-1.0, 5.0e-1}, {8.7617269067352493e-1, 1.641155981435402e-1}},
    {{3.0, 2.0000000000000001e-1}, {-1.1317809938042863e-1, 4.9160812041049828e-1}},
    {{-1.0e-2, 1.0e-3}, {1.7610925165175782, 2.3479118085337186e-3}},
    {{0.0, 1.0e-4}, {1.7853974190763509, 2.5566660941546462e-4}},
    {{1.0e+1, 1.0e+1}, {1.0313054791423777e-1, 2.4456031270817782e-1}},
    {{-5.0, 2.0}, {4.2258997729539949e-1, 8.0127871537676143e-2}},
    {{2.9999999999999999e-1, -6.9999999999999996e-1}, {1.0043941569406274, -9.5362356999765281e-1}},
    {{-2.0, -1.0}, {6.4337887622098336e-1, -1.3932985327576721e-1}},
};

struct PowerRef { double alpha; std::complex<double> lambda, m; };
inline const PowerRef kPower[] = {
    {-0.5, {0.0, 1.0e-2}, {6.2329575109964292, 1.0795799090463865e+1}},
    {-0.5, {0.0, 1.0}, {2.8930825983423926e-1, 5.0109660508224069e-1}},
    {-0.5, {2.0, 3.0}, {3.2290016823536173e-2, 2.4395232710220047e-1}},
    {-0.5, {-4.0, 1.0000000000000001e-1}, {2.2954442798663957e-1, 3.8252977892161104e-3}},
    {1, {0.0, 1.0e-2}, {5.5139539880275552, 3.1834828192869195}},
    {1, {0.0, 1.0}, {1.1879453751046215, 6.8586058209922417e-1}},
    {1, {2.0, 3.0}, {6.7277009948783766e-1, 5.8958868221372277e-1}},
    {1, {-4.0, 1.0000000000000001e-1}, {8.6401021519379675e-1, 7.1987522402909322e-3}},
    {2, {0.0, 1.0e-2}, {4.3219787756133168, 1.7902222251476996}},
    {2, {0.0, 1.0}, {1.3667296929843877, 5.6611797493214971e-1}},
    {2, {2.0, 3.0}, {9.2096327521692369e-1, 5.5167683787372821e-1}},
    {2, {-4.0, 1.0000000000000001e-1}, {1.0459475056578528, 6.5358955776215076e-3}},
};

// Nonreal zero of m(l) + m(-l) for q = -5 on [-1, 1], r = sgn x (upper-right member).
inline const std::complex<double> kWellEigenvalue{2.0910808944737596, 1.099436900882475};

// Lowest periodic eigenvalue of -y'' + 2 cos(2x) y = l y.
inline constexpr double kMathieuLambda0 = -0.45513860410741364;

}  // namespace oracle
