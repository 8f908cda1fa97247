#include "nuosc/app/golden.hpp"

namespace nuosc::app {

std::string_view quantity_name(Quantity q)
{
    switch (q) {
        case Quantity::r2:
            return "r2";
        case Quantity::p2:
            return "p2";
        case Quantity::T:
            return "T";
        case Quantity::V:
            return "V";
        case Quantity::chi:
            return "chi";
    }
    return "?";
}

// Tables 3-6: energies over molecule x g x m x omega_L x n, as printed.
std::span<GoldenEnergy const> golden_energies()
{
    static constexpr GoldenEnergy table[] = {
        {"CO", 0, 0, 0, 0, "6.90572"},
        {"CO", 0, 1, 0, 0, "13.8114"},
        {"CO", 0, 0, 5, 0, "8.52578"},
        {"CO", 0, 1, 5, 0, "22.0516"},
        {"CO", 0, 0, 10, 0, "12.1527"},
        {"CO", 0, 1, 10, 0, "34.3055"},
        {"CO", 0, 0, 0, 1, "20.7172"},
        {"CO", 0, 1, 0, 1, "27.6229"},
        {"CO", 0, 0, 5, 1, "25.5773"},
        {"CO", 0, 1, 5, 1, "39.1031"},
        {"CO", 0, 0, 10, 1, "36.4582"},
        {"CO", 0, 1, 10, 1, "58.6109"},
        {"CO", 0, 0, 0, 2, "34.5286"},
        {"CO", 0, 1, 0, 2, "41.4343"},
        {"CO", 0, 0, 5, 2, "42.6289"},
        {"CO", 0, 1, 5, 2, "56.1547"},
        {"CO", 0, 0, 10, 2, "60.7637"},
        {"CO", 0, 1, 10, 2, "82.9164"},
        {"CO", 0, 0, 0, 3, "48.3488"},
        {"CO", 0, 1, 0, 3, "55.2457"},
        {"CO", 0, 0, 5, 3, "59.6805"},
        {"CO", 0, 1, 5, 3, "73.2062"},
        {"CO", 0, 0, 10, 3, "85.0691"},
        {"CO", 0, 1, 10, 3, "107.222"},
        {"CO", 1, 0, 0, 0, "16.6719"},
        {"CO", 1, 1, 0, 0, "18.8668"},
        {"CO", 1, 0, 5, 0, "20.5831"},
        {"CO", 1, 1, 5, 0, "28.2929"},
        {"CO", 1, 0, 10, 0, "29.3393"},
        {"CO", 1, 1, 10, 0, "43.2019"},
        {"CO", 1, 0, 0, 1, "30.4833"},
        {"CO", 1, 1, 0, 1, "32.6782"},
        {"CO", 1, 0, 5, 1, "37.6346"},
        {"CO", 1, 1, 5, 1, "45.3444"},
        {"CO", 1, 0, 10, 1, "53.6448"},
        {"CO", 1, 1, 10, 1, "67.5074"},
        {"CO", 1, 0, 0, 2, "44.2947"},
        {"CO", 1, 1, 0, 2, "46.4896"},
        {"CO", 1, 0, 5, 2, "54.6862"},
        {"CO", 1, 1, 5, 2, "62.3960"},
        {"CO", 1, 0, 10, 2, "77.9502"},
        {"CO", 1, 1, 10, 2, "91.8128"},
        {"CO", 1, 0, 0, 3, "58.1062"},
        {"CO", 1, 1, 0, 3, "60.3011"},
        {"CO", 1, 0, 5, 3, "71.7377"},
        {"CO", 1, 1, 5, 3, "79.4475"},
        {"CO", 1, 0, 10, 3, "102.256"},
        {"CO", 1, 1, 10, 3, "116.118"},
        {"HCl", 0, 0, 0, 0, "3.55519"},
        {"HCl", 0, 1, 0, 0, "7.11039"},
        {"HCl", 0, 0, 5, 0, "6.1351"},
        {"HCl", 0, 1, 5, 0, "17.2702"},
        {"HCl", 0, 0, 10, 0, "10.6132"},
        {"HCl", 0, 1, 10, 0, "31.2263"},
        {"HCl", 0, 0, 0, 1, "10.6656"},
        {"HCl", 0, 1, 0, 1, "14.2208"},
        {"HCl", 0, 0, 5, 1, "18.4053"},
        {"HCl", 0, 1, 5, 1, "29.5404"},
        {"HCl", 0, 0, 10, 1, "31.8395"},
        {"HCl", 0, 1, 10, 1, "52.4527"},
        {"HCl", 0, 0, 0, 2, "17.7760"},
        {"HCl", 0, 1, 0, 2, "21.3312"},
        {"HCl", 0, 0, 5, 2, "30.6755"},
        {"HCl", 0, 1, 5, 2, "41.8106"},
        {"HCl", 0, 0, 10, 2, "53.0659"},
        {"HCl", 0, 1, 10, 2, "73.6790"},
        {"HCl", 0, 0, 0, 3, "24.8864"},
        {"HCl", 0, 1, 0, 3, "28.4416"},
        {"HCl", 0, 0, 5, 3, "42.9457"},
        {"HCl", 0, 1, 5, 3, "54.0808"},
        {"HCl", 0, 0, 10, 3, "74.2922"},
        {"HCl", 0, 1, 10, 3, "94.9054"},
        {"HCl", 1, 0, 0, 0, "8.5830"},
        {"HCl", 1, 1, 0, 0, "9.71297"},
        {"HCl", 1, 0, 5, 0, "14.8114"},
        {"HCl", 1, 1, 5, 0, "21.7614"},
        {"HCl", 1, 0, 10, 0, "25.6225"},
        {"HCl", 1, 1, 10, 0, "38.9957"},
        {"HCl", 1, 0, 0, 1, "15.6934"},
        {"HCl", 1, 1, 0, 1, "16.8234"},
        {"HCl", 1, 0, 5, 1, "27.0816"},
        {"HCl", 1, 1, 5, 1, "34.0316"},
        {"HCl", 1, 0, 10, 1, "46.8488"},
        {"HCl", 1, 1, 10, 1, "60.2221"},
        {"HCl", 1, 0, 0, 2, "22.8038"},
        {"HCl", 1, 1, 0, 2, "23.9337"},
        {"HCl", 1, 0, 5, 2, "39.3518"},
        {"HCl", 1, 1, 5, 2, "46.3018"},
        {"HCl", 1, 0, 10, 2, "68.0751"},
        {"HCl", 1, 1, 10, 2, "81.4484"},
        {"HCl", 1, 0, 0, 3, "29.9142"},
        {"HCl", 1, 1, 0, 3, "31.0441"},
        {"HCl", 1, 0, 5, 3, "51.6220"},
        {"HCl", 1, 1, 5, 3, "58.5720"},
        {"HCl", 1, 0, 10, 3, "89.3015"},
        {"HCl", 1, 1, 10, 3, "102.675"},
        {"I2", 0, 0, 0, 0, "2.08359"},
        {"I2", 0, 1, 0, 0, "4.16718"},
        {"I2", 0, 0, 5, 0, "5.41677"},
        {"I2", 0, 1, 5, 0, "15.8335"},
        {"I2", 0, 0, 10, 0, "10.2148"},
        {"I2", 0, 1, 10, 0, "30.4295"},
        {"I2", 0, 0, 0, 1, "6.25077"},
        {"I2", 0, 1, 0, 1, "8.33437"},
        {"I2", 0, 0, 5, 1, "16.2503"},
        {"I2", 0, 1, 5, 1, "26.6671"},
        {"I2", 0, 0, 10, 1, "30.6443"},
        {"I2", 0, 1, 10, 1, "50.859"},
        {"I2", 0, 0, 0, 2, "10.4180"},
        {"I2", 0, 1, 0, 2, "12.5015"},
        {"I2", 0, 0, 5, 2, "27.0838"},
        {"I2", 0, 1, 5, 2, "37.5006"},
        {"I2", 0, 0, 10, 2, "51.0738"},
        {"I2", 0, 1, 10, 2, "71.2886"},
        {"I2", 0, 0, 0, 3, "14.5851"},
        {"I2", 0, 1, 0, 3, "16.6687"},
        {"I2", 0, 0, 5, 3, "37.9174"},
        {"I2", 0, 1, 5, 3, "48.3341"},
        {"I2", 0, 0, 10, 3, "71.5033"},
        {"I2", 0, 1, 10, 3, "91.7181"},
        {"I2", 1, 0, 0, 0, "5.03023"},
        {"I2", 1, 1, 0, 0, "5.69248"},
        {"I2", 1, 0, 5, 0, "13.0772"},
        {"I2", 1, 1, 5, 0, "19.7989"},
        {"I2", 1, 0, 10, 0, "24.6606"},
        {"I2", 1, 1, 10, 0, "37.9072"},
        {"I2", 1, 0, 0, 1, "9.19742"},
        {"I2", 1, 1, 0, 1, "9.85966"},
        {"I2", 1, 0, 5, 1, "23.9108"},
        {"I2", 1, 1, 5, 1, "30.6324"},
        {"I2", 1, 0, 10, 1, "45.0901"},
        {"I2", 1, 1, 10, 1, "58.3368"},
        {"I2", 1, 0, 0, 2, "13.3646"},
        {"I2", 1, 1, 0, 2, "14.0268"},
        {"I2", 1, 0, 5, 2, "34.7443"},
        {"I2", 1, 1, 5, 2, "41.4659"},
        {"I2", 1, 0, 10, 2, "65.5197"},
        {"I2", 1, 1, 10, 2, "78.7663"},
        {"I2", 1, 0, 0, 3, "17.5318"},
        {"I2", 1, 1, 0, 3, "18.1940"},
        {"I2", 1, 0, 5, 3, "45.5778"},
        {"I2", 1, 1, 5, 3, "52.2995"},
        {"I2", 1, 0, 10, 3, "85.9492"},
        {"I2", 1, 1, 10, 3, "99.1958"},
        {"H2", 0, 0, 0, 0, "3.74831"},
        {"H2", 0, 1, 0, 0, "7.49662"},
        {"H2", 0, 0, 5, 0, "6.24899"},
        {"H2", 0, 1, 5, 0, "17.4980"},
        {"H2", 0, 0, 10, 0, "10.6794"},
        {"H2", 0, 1, 10, 0, "31.3588"},
        {"H2", 0, 0, 0, 1, "11.2449"},
        {"H2", 0, 1, 0, 1, "14.9932"},
        {"H2", 0, 0, 5, 1, "18.7470"},
        {"H2", 0, 1, 5, 1, "29.9959"},
        {"H2", 0, 0, 10, 1, "32.0382"},
        {"H2", 0, 1, 10, 1, "52.7176"},
        {"H2", 0, 0, 0, 2, "18.7416"},
        {"H2", 0, 1, 0, 2, "22.4899"},
        {"H2", 0, 0, 5, 2, "31.2449"},
        {"H2", 0, 1, 5, 2, "42.4939"},
        {"H2", 0, 0, 10, 2, "53.3971"},
        {"H2", 0, 1, 10, 2, "74.0765"},
        {"H2", 0, 0, 0, 3, "26.2382"},
        {"H2", 0, 1, 0, 3, "29.9865"},
        {"H2", 0, 0, 5, 3, "43.7429"},
        {"H2", 0, 1, 5, 3, "54.9919"},
        {"H2", 0, 0, 10, 3, "74.7559"},
        {"H2", 0, 1, 10, 3, "95.4353"},
        {"H2", 1, 0, 0, 0, "9.04922"},
        {"H2", 1, 1, 0, 0, "10.2406"},
        {"H2", 1, 0, 5, 0, "15.0864"},
        {"H2", 1, 1, 5, 0, "22.0725"},
        {"H2", 1, 0, 10, 0, "25.7824"},
        {"H2", 1, 1, 10, 0, "39.1767"},
        {"H2", 1, 0, 0, 1, "16.5458"},
        {"H2", 1, 1, 0, 1, "17.7372"},
        {"H2", 1, 0, 5, 1, "27.5844"},
        {"H2", 1, 1, 5, 1, "34.5705"},
        {"H2", 1, 0, 10, 1, "47.1412"},
        {"H2", 1, 1, 10, 1, "60.5355"},
        {"H2", 1, 0, 0, 2, "24.0425"},
        {"H2", 1, 1, 0, 2, "25.2338"},
        {"H2", 1, 0, 5, 2, "40.0823"},
        {"H2", 1, 1, 5, 2, "47.0685"},
        {"H2", 1, 0, 10, 2, "68.5000"},
        {"H2", 1, 1, 10, 2, "81.8943"},
        {"H2", 1, 0, 0, 3, "31.5391"},
        {"H2", 1, 1, 0, 3, "32.7304"},
        {"H2", 1, 0, 5, 3, "52.5803"},
        {"H2", 1, 1, 5, 3, "59.5665"},
        {"H2", 1, 0, 10, 3, "89.8588"},
        {"H2", 1, 1, 10, 3, "103.253"},
    };
    return table;
}

// Tables 7-11: g = m = 1 (and z = e = 1 for chi), as printed.
std::span<GoldenObservable const> golden_observables()
{
    static constexpr GoldenObservable table[] = {
        {Quantity::r2, "CO", 0, 0, "0.395622"},
        {Quantity::r2, "CO", 0, 5, "0.320446"},
        {Quantity::r2, "CO", 0, 10, "0.224810"},
        {Quantity::r2, "HCl", 0, 0, "0.768467"},
        {Quantity::r2, "HCl", 0, 5, "0.445315"},
        {Quantity::r2, "HCl", 0, 10, "0.257421"},
        {Quantity::r2, "CO", 1, 0, "0.685237"},
        {Quantity::r2, "CO", 1, 5, "0.555028"},
        {Quantity::r2, "CO", 1, 10, "0.389382"},
        {Quantity::r2, "HCl", 1, 0, "1.331020"},
        {Quantity::r2, "HCl", 1, 5, "0.771308"},
        {Quantity::r2, "HCl", 1, 10, "0.445866"},
        {Quantity::r2, "CO", 2, 0, "0.974852"},
        {Quantity::r2, "CO", 2, 5, "0.789611"},
        {Quantity::r2, "CO", 2, 10, "0.553954"},
        {Quantity::r2, "HCl", 2, 0, "1.893580"},
        {Quantity::r2, "HCl", 2, 5, "1.097300"},
        {Quantity::r2, "HCl", 2, 10, "0.634311"},
        {Quantity::r2, "CO", 3, 0, "1.264470"},
        {Quantity::r2, "CO", 3, 5, "1.024190"},
        {Quantity::r2, "CO", 3, 10, "0.718526"},
        {Quantity::r2, "HCl", 3, 0, "2.456140"},
        {Quantity::r2, "HCl", 3, 5, "1.423290"},
        {Quantity::r2, "HCl", 3, 10, "0.822756"},
        {Quantity::r2, "I2", 0, 0, "1.31122"},
        {Quantity::r2, "I2", 0, 5, "0.504369"},
        {Quantity::r2, "I2", 0, 10, "0.267461"},
        {Quantity::r2, "H2", 0, 0, "0.728875"},
        {Quantity::r2, "H2", 0, 5, "0.437199"},
        {Quantity::r2, "H2", 0, 10, "0.255824"},
        {Quantity::r2, "I2", 1, 0, "2.27110"},
        {Quantity::r2, "I2", 1, 5, "0.873593"},
        {Quantity::r2, "I2", 1, 10, "0.463256"},
        {Quantity::r2, "H2", 1, 0, "1.262450"},
        {Quantity::r2, "H2", 1, 5, "0.757251"},
        {Quantity::r2, "H2", 1, 10, "0.443100"},
        {Quantity::r2, "I2", 2, 0, "3.23098"},
        {Quantity::r2, "I2", 2, 5, "1.242820"},
        {Quantity::r2, "I2", 2, 10, "0.659051"},
        {Quantity::r2, "H2", 2, 0, "1.796020"},
        {Quantity::r2, "H2", 2, 5, "1.077300"},
        {Quantity::r2, "H2", 2, 10, "0.630377"},
        {Quantity::r2, "I2", 3, 0, "4.19087"},
        {Quantity::r2, "I2", 3, 5, "1.612040"},
        {Quantity::r2, "I2", 3, 10, "0.854846"},
        {Quantity::r2, "H2", 3, 0, "2.329600"},
        {Quantity::r2, "H2", 3, 5, "1.397350"},
        {Quantity::r2, "H2", 3, 10, "0.817653"},
        {Quantity::p2, "CO", 0, 0, "-2.14868e-25"},
        {Quantity::p2, "CO", 0, 5, "-1.74039e-25"},
        {Quantity::p2, "CO", 0, 10, "-1.22098e-25"},
        {Quantity::p2, "HCl", 0, 0, "-1.58027e-26"},
        {Quantity::p2, "HCl", 0, 5, "-9.15745e-27"},
        {Quantity::p2, "HCl", 0, 10, "-5.29359e-27"},
        {Quantity::p2, "CO", 1, 0, "-3.72163e-25"},
        {Quantity::p2, "CO", 1, 5, "-3.01445e-25"},
        {Quantity::p2, "CO", 1, 10, "-2.11479e-25"},
        {Quantity::p2, "HCl", 1, 0, "-2.73712e-26"},
        {Quantity::p2, "HCl", 1, 5, "-1.58612e-26"},
        {Quantity::p2, "HCl", 1, 10, "-9.16877e-27"},
        {Quantity::p2, "CO", 2, 0, "-5.29457e-25"},
        {Quantity::p2, "CO", 2, 5, "-4.28850e-25"},
        {Quantity::p2, "CO", 2, 10, "-3.00861e-25"},
        {Quantity::p2, "HCl", 2, 0, "-3.89396e-26"},
        {Quantity::p2, "HCl", 2, 5, "-2.25649e-26"},
        {Quantity::p2, "HCl", 2, 10, "-1.30440e-26"},
        {Quantity::p2, "CO", 3, 0, "-6.86752e-25"},
        {Quantity::p2, "CO", 3, 5, "-5.56256e-25"},
        {Quantity::p2, "CO", 3, 10, "-3.90242e-25"},
        {Quantity::p2, "HCl", 3, 0, "-5.0508e-26"},
        {Quantity::p2, "HCl", 3, 5, "-2.92686e-26"},
        {Quantity::p2, "HCl", 3, 10, "-1.69191e-26"},
        {Quantity::p2, "I2", 0, 0, "-5.99593e-25"},
        {Quantity::p2, "I2", 0, 5, "-2.30637e-25"},
        {Quantity::p2, "I2", 0, 10, "-1.22304e-25"},
        {Quantity::p2, "H2", 0, 0, "-8.56614e-27"},
        {Quantity::p2, "H2", 0, 5, "-5.13820e-27"},
        {Quantity::p2, "H2", 0, 10, "-3.00659e-27"},
        {Quantity::p2, "I2", 1, 0, "-1.03852e-24"},
        {Quantity::p2, "I2", 1, 5, "-3.99475e-25"},
        {Quantity::p2, "I2", 1, 10, "-2.11837e-25"},
        {Quantity::p2, "H2", 1, 0, "-1.48370e-26"},
        {Quantity::p2, "H2", 1, 5, "-8.89963e-27"},
        {Quantity::p2, "H2", 1, 10, "-5.20756e-27"},
        {Quantity::p2, "I2", 2, 0, "-1.47746e-24"},
        {Quantity::p2, "I2", 2, 5, "-5.68313e-25"},
        {Quantity::p2, "I2", 2, 10, "-3.01369e-25"},
        {Quantity::p2, "H2", 2, 0, "-2.11078e-26"},
        {Quantity::p2, "H2", 2, 5, "-1.26611e-26"},
        {Quantity::p2, "H2", 2, 10, "-7.40853e-27"},
        {Quantity::p2, "I2", 3, 0, "-1.91639e-24"},
        {Quantity::p2, "I2", 3, 5, "-7.37151e-25"},
        {Quantity::p2, "I2", 3, 10, "-3.90902e-25"},
        {Quantity::p2, "H2", 3, 0, "-2.73787e-26"},
        {Quantity::p2, "H2", 3, 5, "-1.64225e-26"},
        {Quantity::p2, "H2", 3, 10, "-9.60951e-27"},
        {Quantity::T, "CO", 0, 0, "-9.43338"},
        {Quantity::T, "CO", 0, 5, "-7.64086"},
        {Quantity::T, "CO", 0, 10, "-5.36046"},
        {Quantity::T, "HCl", 0, 0, "-4.85649"},
        {Quantity::T, "HCl", 0, 5, "-2.81426"},
        {Quantity::T, "HCl", 0, 10, "-1.62682"},
        {Quantity::T, "CO", 1, 0, "-16.3391"},
        {Quantity::T, "CO", 1, 5, "-13.2344"},
        {Quantity::T, "CO", 1, 10, "-9.28460"},
        {Quantity::T, "HCl", 1, 0, "-8.41168"},
        {Quantity::T, "HCl", 1, 5, "-4.87444"},
        {Quantity::T, "HCl", 1, 10, "-2.81774"},
        {Quantity::T, "CO", 2, 0, "-23.2448"},
        {Quantity::T, "CO", 2, 5, "-18.8279"},
        {Quantity::T, "CO", 2, 10, "-13.2087"},
        {Quantity::T, "HCl", 2, 0, "-11.9669"},
        {Quantity::T, "HCl", 2, 5, "-6.93462"},
        {Quantity::T, "HCl", 2, 10, "-4.00866"},
        {Quantity::T, "CO", 3, 0, "-30.1505"},
        {Quantity::T, "CO", 3, 5, "-24.4214"},
        {Quantity::T, "CO", 3, 10, "-17.1329"},
        {Quantity::T, "HCl", 3, 0, "-15.5221"},
        {Quantity::T, "HCl", 3, 5, "-8.99480"},
        {Quantity::T, "HCl", 3, 10, "-5.19957"},
        {Quantity::T, "I2", 0, 0, "-2.84624"},
        {Quantity::T, "I2", 0, 5, "-1.09482"},
        {Quantity::T, "I2", 0, 10, "-0.580571"},
        {Quantity::T, "H2", 0, 0, "-5.12029"},
        {Quantity::T, "H2", 0, 5, "-3.07129"},
        {Quantity::T, "H2", 0, 10, "-1.79714"},
        {Quantity::T, "I2", 1, 0, "-4.92983"},
        {Quantity::T, "I2", 1, 5, "-1.89629"},
        {Quantity::T, "I2", 1, 10, "-1.00558"},
        {Quantity::T, "H2", 1, 0, "-8.86860"},
        {Quantity::T, "H2", 1, 5, "-5.31962"},
        {Quantity::T, "H2", 1, 10, "-3.11274"},
        {Quantity::T, "I2", 2, 0, "-7.01342"},
        {Quantity::T, "I2", 2, 5, "-2.69775"},
        {Quantity::T, "I2", 2, 10, "-1.43059"},
        {Quantity::T, "H2", 2, 0, "-12.6169"},
        {Quantity::T, "H2", 2, 5, "-7.56796"},
        {Quantity::T, "H2", 2, 10, "-4.42834"},
        {Quantity::T, "I2", 3, 0, "-9.09701"},
        {Quantity::T, "I2", 3, 5, "-3.49922"},
        {Quantity::T, "I2", 3, 10, "-1.85559"},
        {Quantity::T, "H2", 3, 0, "-16.3652"},
        {Quantity::T, "H2", 3, 5, "-9.81600"},
        {Quantity::T, "H2", 3, 10, "-5.74390"},
        {Quantity::V, "CO", 0, 0, "28.3002"},
        {Quantity::V, "CO", 0, 5, "35.9337"},
        {Quantity::V, "CO", 0, 10, "48.5623"},
        {Quantity::V, "HCl", 0, 0, "14.5695"},
        {Quantity::V, "HCl", 0, 5, "24.5757"},
        {Quantity::V, "HCl", 0, 10, "40.6225"},
        {Quantity::V, "CO", 1, 0, "49.0173"},
        {Quantity::V, "CO", 1, 5, "58.5788"},
        {Quantity::V, "CO", 1, 10, "76.7919"},
        {Quantity::V, "HCl", 1, 0, "25.2350"},
        {Quantity::V, "HCl", 1, 5, "38.9060"},
        {Quantity::V, "HCl", 1, 10, "63.0398"},
        {Quantity::V, "CO", 2, 0, "69.7345"},
        {Quantity::V, "CO", 2, 5, "81.2238"},
        {Quantity::V, "CO", 2, 10, "105.022"},
        {Quantity::V, "HCl", 2, 0, "35.9006"},
        {Quantity::V, "HCl", 2, 5, "53.2364"},
        {Quantity::V, "HCl", 2, 10, "85.4571"},
        {Quantity::V, "CO", 3, 0, "90.4516"},
        {Quantity::V, "CO", 3, 5, "103.869"},
        {Quantity::V, "CO", 3, 10, "133.251"},
        {Quantity::V, "HCl", 3, 0, "46.5662"},
        {Quantity::V, "HCl", 3, 5, "67.5668"},
        {Quantity::V, "HCl", 3, 10, "107.874"},
        {Quantity::V, "I2", 0, 0, "8.53872"},
        {Quantity::V, "I2", 0, 5, "20.8937"},
        {Quantity::V, "I2", 0, 10, "38.4878"},
        {Quantity::V, "H2", 0, 0, "15.3609"},
        {Quantity::V, "H2", 0, 5, "25.1438"},
        {Quantity::V, "H2", 0, 10, "40.9738"},
        {Quantity::V, "I2", 1, 0, "14.7895"},
        {Quantity::V, "I2", 1, 5, "32.5287"},
        {Quantity::V, "I2", 1, 10, "59.3423"},
        {Quantity::V, "H2", 1, 0, "26.6058"},
        {Quantity::V, "H2", 1, 5, "39.8901"},
        {Quantity::V, "H2", 1, 10, "63.6483"},
        {Quantity::V, "I2", 2, 0, "21.0403"},
        {Quantity::V, "I2", 2, 5, "44.1637"},
        {Quantity::V, "I2", 2, 10, "80.1969"},
        {Quantity::V, "H2", 2, 0, "37.8507"},
        {Quantity::V, "H2", 2, 5, "54.6365"},
        {Quantity::V, "H2", 2, 10, "86.3227"},
        {Quantity::V, "I2", 3, 0, "27.2910"},
        {Quantity::V, "I2", 3, 5, "55.7987"},
        {Quantity::V, "I2", 3, 10, "101.051"},
        {Quantity::V, "H2", 3, 0, "49.0957"},
        {Quantity::V, "H2", 3, 5, "69.3828"},
        {Quantity::V, "H2", 3, 10, "108.997"},
        {Quantity::chi, "CO", 0, 0, "-3.87265e+31"},
        {Quantity::chi, "CO", 0, 5, "-3.13677e+31"},
        {Quantity::chi, "CO", 0, 10, "-2.20061e+31"},
        {Quantity::chi, "HCl", 0, 0, "-5.26560e+32"},
        {Quantity::chi, "HCl", 0, 5, "-3.05133e+32"},
        {Quantity::chi, "HCl", 0, 10, "-1.76387e+32"},
        {Quantity::chi, "CO", 1, 0, "-6.70762e+31"},
        {Quantity::chi, "CO", 1, 5, "-5.43304e+31"},
        {Quantity::chi, "CO", 1, 10, "-3.81157e+31"},
        {Quantity::chi, "HCl", 1, 0, "-9.12028e+32"},
        {Quantity::chi, "HCl", 1, 5, "-5.28506e+32"},
        {Quantity::chi, "HCl", 1, 10, "-3.05511e+32"},
        {Quantity::chi, "CO", 2, 0, "-9.54260e+31"},
        {Quantity::chi, "CO", 2, 5, "-7.72932e+31"},
        {Quantity::chi, "CO", 2, 10, "-5.42252e+31"},
        {Quantity::chi, "HCl", 2, 0, "-1.29750e+33"},
        {Quantity::chi, "HCl", 2, 5, "-7.51880e+32"},
        {Quantity::chi, "HCl", 2, 10, "-4.34635e+32"},
        {Quantity::chi, "CO", 3, 0, "-1.23776e+32"},
        {Quantity::chi, "CO", 3, 5, "-1.00256e+32"},
        {Quantity::chi, "CO", 3, 10, "-7.03348e+31"},
        {Quantity::chi, "HCl", 3, 0, "-1.68297e+33"},
        {Quantity::chi, "HCl", 3, 5, "-9.75253e+32"},
        {Quantity::chi, "HCl", 3, 10, "-5.63759e+32"},
        {Quantity::chi, "I2", 0, 0, "-1.38779e+31"},
        {Quantity::chi, "I2", 0, 5, "-5.33822e+30"},
        {Quantity::chi, "I2", 0, 10, "-2.83079e+30"},
        {Quantity::chi, "H2", 0, 0, "-9.71393e+32"},
        {Quantity::chi, "H2", 0, 5, "-5.82668e+32"},
        {Quantity::chi, "H2", 0, 10, "-3.40944e+32"},
        {Quantity::chi, "I2", 1, 0, "-2.40372e+31"},
        {Quantity::chi, "I2", 1, 5, "-9.24607e+30"},
        {Quantity::chi, "I2", 1, 10, "-4.90308e+30"},
        {Quantity::chi, "H2", 1, 0, "-1.68250e+33"},
        {Quantity::chi, "H2", 1, 5, "-1.00921e+33"},
        {Quantity::chi, "H2", 1, 10, "-5.90532e+32"},
        {Quantity::chi, "I2", 2, 0, "-3.41966e+31"},
        {Quantity::chi, "I2", 2, 5, "-1.31539e+31"},
        {Quantity::chi, "I2", 2, 10, "-6.97536e+30"},
        {Quantity::chi, "H2", 2, 0, "-2.39361e+33"},
        {Quantity::chi, "H2", 2, 5, "-1.43575e+33"},
        {Quantity::chi, "H2", 2, 10, "-8.40121e+32"},
        {Quantity::chi, "I2", 3, 0, "-4.43559e+31"},
        {Quantity::chi, "I2", 3, 5, "-1.70618e+31"},
        {Quantity::chi, "I2", 3, 10, "-9.04765e+30"},
        {Quantity::chi, "H2", 3, 0, "-3.10472e+33"},
        {Quantity::chi, "H2", 3, 5, "-1.86229e+33"},
        {Quantity::chi, "H2", 3, 10, "-1.08971e+33"},
    };
    return table;
}

} // namespace nuosc::app
