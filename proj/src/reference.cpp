#include "sendov/reference.hpp"

#include <cmath>

namespace sendov {

const std::vector<ReferenceSolution>& reference_solutions() {
    // Refined vectors regenerated with: sendov construct --n <n> (residual
    // sup norm < 1e-12); the first four entries agree with the published
    // values to ~1e-10.
    static const std::vector<ReferenceSolution> table = {
        {8, 0.7290857513, -0.2035409790, -0.5410836525, 0.7327229666,
         {0.72908575125185093, -0.20354097901968152, -0.54108365254918989,
          0.73272296664741554, -1.0261297112768579, -0.10863215212303062}},
        {9, 0.7145672829, -0.2157115753, -0.8021671918, 0.9280147829,
         {0.71456728287639604, -0.21571157533348778, -0.80216719180610552,
          0.92801478293640738, -1.0378453917183281, -0.60021387113122171,
          1.8979114743746617}},
        {12, 0.8403619619, -0.1155828545, -0.4090272613, 0.5513532168,
         {0.8403619618771242, -0.11558285452807604, -0.40902726127146849,
          0.55135321678532101, -0.82186323499286074, 0.0318412087135692}},
        {13, 0.8275325585, -0.1246203379, -0.5415308686, 0.6699194279,
         {0.82753255852036878, -0.12462033787257473, -0.54153086862087352,
          0.66991942792579307, -0.92979638414456089, -0.22399284766896901,
          1.9471118663010107}},
        {14, 0.8158105092, -0.1304708647, -0.6885970233, 0.7916663399,
         {0.81581050916432007, -0.13047086472623542, -0.68859702330356976,
          0.79166633989957069, -1.0072245526074359, -0.46251267772522731}},
        {15, 0.7999767588, -0.1400336168, -0.8389864647, 0.9148263642,
         {0.79997675878816721, -0.1400336167500271, -0.83898646470354843,
          0.91482636421892349, -1.0361167825007138, -0.69347746003932953,
          1.9619230986848459}},
        {19, 0.8684432238, -0.0923361850, -0.6503807257, 0.7337221736,
         {0.86844322381257155, -0.092336184999001342, -0.65038072572884287,
          0.7337221735678594, -0.94489390736460399, -0.4657476104100145,
          1.9748525252455138}},
        {20, 0.8570396874, -0.0982636528, -0.7563752823, 0.8263310816,
         {0.85703968744944314, -0.098263652834192194, -0.75637528227820761,
          0.82633108161183155, -0.99994923675252712, -0.61099884202242682}},
        {26, 0.8817716692, -0.0797127446, -0.7969496845, 0.8496586550,
         {0.88177166923558692, -0.079712744624590839, -0.79694968447479797,
          0.84965865500565319, -0.99652829452662839, -0.69321169685692774}},
    };
    return table;
}

const ReferenceSolution* reference_for(int n) {
    for (const ReferenceSolution& ref : reference_solutions())
        if (ref.n == n) return &ref;
    return nullptr;
}

CandidateParams reference_params(const ReferenceSolution& ref) {
    CandidateParams params;
    params.n = ref.n;
    params.beta = ref.refined[0];
    params.a = ref.refined[1];
    params.b = ref.refined[2];
    params.c = ref.refined[3];
    params.d.assign(ref.refined.begin() + 4, ref.refined.end());
    return params;
}

std::vector<double> reference_seed(const ReferenceSolution& ref, int decimals) {
    const double scale = std::pow(10.0, decimals);
    std::vector<double> seed(ref.refined);
    for (double& x : seed) x = std::round(x * scale) / scale;
    return seed;
}

}  // namespace sendov
