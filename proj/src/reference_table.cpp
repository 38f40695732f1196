#include "expbm/reference_table.hpp"

namespace expbm {

namespace {

constexpr ReferenceEntry kTable[] = {
    {0.01, 0.0000000000},
    {0.02, 0.0000000009},
    {0.03, 0.0000025112},
    {0.04, 0.0001196142},
    {0.05, 0.0011483687},
    {0.06, 0.0049930908},
    {0.07, 0.0138753955},
    {0.08, 0.0292395656},
    {0.09, 0.0513458853},
    {0.10, 0.0794780720},
    {0.11, 0.1123591601},
    {0.12, 0.1485212098},
    {0.13, 0.1865502642},
    {0.14, 0.2252159442},
    {0.15, 0.2635203296},
    {0.16, 0.3006989269},
    {0.17, 0.3361973070},
    {0.18, 0.3696381349},
    {0.19, 0.4007868533},
    {0.20, 0.4295201362},
    {0.21, 0.4557987888},
    {0.22, 0.4796454414},
    {0.23, 0.5011267281},
    {0.24, 0.5203393667},
    {0.25, 0.5373994870},
    {0.26, 0.5524345856},
    {0.27, 0.5655775645},
    {0.28, 0.5769623929},
    {0.29, 0.5867210214},
    {0.30, 0.5949812497},
    {0.31, 0.6018653139},
    {0.32, 0.6074890101},
    {0.33, 0.6119612147},
    {0.34, 0.6153836919},
    {0.35, 0.6178511084},
    {0.36, 0.6194511911},
    {0.37, 0.6202649828},
    {0.38, 0.6203671604},
    {0.39, 0.6198263907},
    {0.40, 0.6187057040},
    {0.41, 0.6170628736},
    {0.42, 0.6149507900},
    {0.43, 0.6124178242},
    {0.44, 0.6095081762},
    {0.45, 0.6062622048},
    {0.46, 0.6027167376},
    {0.47, 0.5989053617},
    {0.48, 0.5948586930},
    {0.49, 0.5906046267},
    {0.50, 0.5861685681},
    {0.51, 0.5815736451},
    {0.52, 0.5768409044},
    {0.53, 0.5719894905},
    {0.54, 0.5670368103},
    {0.55, 0.5619986842},
    {0.56, 0.5568894834},
    {0.57, 0.5517222559},
    {0.58, 0.5465088421},
    {0.59, 0.5412599790},
    {0.60, 0.5359853972},
    {0.61, 0.5306939077},
    {0.62, 0.5253934820},
    {0.63, 0.5200913256},
    {0.64, 0.5147939437},
    {0.65, 0.5095072027},
    {0.66, 0.5042363855},
    {0.67, 0.4989862419},
    {0.68, 0.4937610351},
    {0.69, 0.4885645839},
    {0.70, 0.4834003011},
    {0.71, 0.4782712290},
    {0.72, 0.4731800715},
    {0.73, 0.4681292234},
    {0.74, 0.4631207976},
    {0.75, 0.4581566492},
    {0.76, 0.4532383988},
    {0.77, 0.4483674521},
    {0.78, 0.4435450197},
    {0.79, 0.4387721336},
    {0.80, 0.4340496636},
    {0.81, 0.4293783310},
    {0.82, 0.4247587227},
    {0.83, 0.4201913026},
    {0.84, 0.4156764232},
    {0.85, 0.4112143355},
    {0.86, 0.4068051983},
    {0.87, 0.4024490870},
    {0.88, 0.3981460013},
    {0.89, 0.3938958721},
    {0.90, 0.3896985686},
    {0.91, 0.3855539041},
    {0.92, 0.3814616412},
    {0.93, 0.3774214976},
    {0.94, 0.3734331500},
    {0.95, 0.3694962388},
    {0.96, 0.3656103720},
    {0.97, 0.3617751285},
    {0.98, 0.3579900616},
    {0.99, 0.3542547020},
    {1.00, 0.3505685606},
    {1.01, 0.3469311307},
    {1.02, 0.3433418909},
    {1.03, 0.3398003064},
    {1.04, 0.3363058318},
    {1.05, 0.3328579122},
    {1.06, 0.3294559852},
    {1.07, 0.3260994820},
    {1.08, 0.3227878293},
    {1.09, 0.3195204500},
    {1.10, 0.3162967645},
    {1.11, 0.3131161920},
    {1.12, 0.3099781508},
    {1.13, 0.3068820597},
    {1.14, 0.3038273385},
    {1.15, 0.3008134089},
    {1.16, 0.2978396947},
    {1.17, 0.2949056229},
    {1.18, 0.2920106239},
    {1.19, 0.2891541317},
    {1.20, 0.2863355851},
    {1.21, 0.2835544271},
    {1.22, 0.2808101060},
    {1.23, 0.2781020752},
    {1.24, 0.2754297938},
    {1.25, 0.2727927265},
    {1.26, 0.2701903441},
    {1.27, 0.2676221234},
    {1.28, 0.2650875475},
    {1.29, 0.2625861059},
    {1.30, 0.2601172946},
    {1.31, 0.2576806161},
    {1.32, 0.2552755797},
    {1.33, 0.2529017013},
    {1.34, 0.2505585033},
    {1.35, 0.2482455154},
    {1.36, 0.2459622734},
    {1.37, 0.2437083205},
    {1.38, 0.2414832062},
    {1.39, 0.2392864869},
    {1.40, 0.2371177259},
    {1.41, 0.2349764928},
    {1.42, 0.2328623643},
    {1.43, 0.2307749233},
    {1.44, 0.2287137596},
    {1.45, 0.2266784693},
    {1.46, 0.2246686549},
    {1.47, 0.2226839255},
    {1.48, 0.2207238963},
    {1.49, 0.2187881889},
    {1.50, 0.2168764311},
    {1.51, 0.2149882566},
    {1.52, 0.2131233054},
    {1.53, 0.2112812233},
    {1.54, 0.2094616620},
    {1.55, 0.2076642790},
    {1.56, 0.2058887374},
    {1.57, 0.2041347063},
    {1.58, 0.2024018600},
    {1.59, 0.2006898783},
    {1.60, 0.1989984467},
    {1.61, 0.1973272557},
    {1.62, 0.1956760010},
    {1.63, 0.1940443838},
    {1.64, 0.1924321099},
    {1.65, 0.1908388905},
    {1.66, 0.1892644415},
    {1.67, 0.1877084836},
    {1.68, 0.1861707424},
    {1.69, 0.1846509478},
    {1.70, 0.1831488348},
    {1.71, 0.1816641425},
    {1.72, 0.1801966146},
    {1.73, 0.1787459991},
    {1.74, 0.1773120484},
    {1.75, 0.1758945189},
    {1.76, 0.1744931712},
    {1.77, 0.1731077702},
    {1.78, 0.1717380844},
    {1.79, 0.1703838864},
    {1.80, 0.1690449526},
    {1.81, 0.1677210634},
    {1.82, 0.1664120026},
    {1.83, 0.1651175578},
    {1.84, 0.1638375201},
    {1.85, 0.1625716841},
    {1.86, 0.1613198481},
    {1.87, 0.1600818135},
    {1.88, 0.1588573850},
    {1.89, 0.1576463709},
    {1.90, 0.1564485823},
    {1.91, 0.1552638337},
    {1.92, 0.1540919427},
    {1.93, 0.1529327297},
    {1.94, 0.1517860184},
    {1.95, 0.1506516352},
    {1.96, 0.1495294094},
    {1.97, 0.1484191731},
    {1.98, 0.1473207614},
    {1.99, 0.1462340117},
    {2.00, 0.1451587645},
};

}  // namespace

std::span<const ReferenceEntry> reference_density_table() { return kTable; }

}  // namespace expbm
