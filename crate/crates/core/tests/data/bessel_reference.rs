// Generated by gen_bessel_reference.py; do not edit by hand.

/// (order, first 20 positive zeros)
pub const ZEROS: &[(f64, [f64; 20])] = &[
    (0.0, [
        2.4048255576957727686,
        5.5200781102863106496,
        8.653727912911012217,
        11.791534439014281614,
        14.930917708487785948,
        18.071063967910922543,
        21.211636629879258959,
        24.352471530749302737,
        27.493479132040254796,
        30.634606468431975118,
        33.775820213573568684,
        36.91709835366404398,
        40.058425764628239295,
        43.199791713176730358,
        46.341188371661814019,
        49.482609897397817174,
        52.624051841114996029,
        55.765510755019979312,
        58.906983926080942133,
        62.048469190227169883,
    ]),
    (1.0, [
        3.8317059702075123156,
        7.0155866698156187535,
        10.173468135062722077,
        13.323691936314223032,
        16.470630050877632813,
        19.615858510468242021,
        22.760084380592771898,
        25.903672087618382625,
        29.046828534916855067,
        32.189679910974403627,
        35.332307550083865103,
        38.474766234771615112,
        41.617094212814450886,
        44.759318997652821733,
        47.901460887185447121,
        51.043535183571509469,
        54.185553641061320532,
        57.327525437901010745,
        60.469457845347491559,
        63.611356698481232631,
    ]),
    (1.5, [
        4.4934094579090641753,
        7.7252518369377071642,
        10.904121659428899827,
        14.06619391283147348,
        17.22075527193076874,
        20.371302959287562845,
        23.519452498689006546,
        26.666054258812673528,
        29.811598790892958837,
        32.956389039822476725,
        36.100622244375610697,
        39.244432361164192842,
        42.387913568131919856,
        45.531134013991279825,
        48.674144231954387139,
        51.816982487279669512,
        54.959678287888935871,
        58.102254754495592595,
        61.244730260374400373,
        64.387119590557413712,
    ]),
];

/// (order, x, J_order(x))
pub const VALUES: &[(f64, f64, f64)] = &[
    (0.0, 0.01, 0.99997500015624956597),
    (0.0, 0.5, 0.93846980724081290423),
    (0.0, 1.0, 0.76519768655796655145),
    (0.0, 2.5, -0.048383776468197996327),
    (0.0, 5.0, -0.17759677131433830435),
    (0.0, 7.75, 0.22523406912010669729),
    (0.0, 11.9, 0.025049441699589563728),
    (0.0, 12.1, 0.069666773606807388498),
    (0.0, 15.0, -0.014224472826780773234),
    (0.0, 19.0, 0.14662943965965120426),
    (0.0, 24.5, 0.023697433734067902112),
    (0.0, 30.0, -0.086367983581040211336),
    (0.0, 37.3, 0.048811957363260090704),
    (0.0, 44.0, 0.086306699332286579115),
    (0.0, 50.0, 0.055812327669251815005),
    (0.0, 63.2, 0.091672108771617595656),
    (0.0, 75.0, 0.034643913805097056137),
    (0.0, 88.8, 0.084570138641729445703),
    (0.0, 100.0, 0.019985850304223122424),
    (1.0, 0.01, 0.0049999375002604161241),
    (1.0, 0.5, 0.24226845767487388638),
    (1.0, 1.0, 0.44005058574493351596),
    (1.0, 2.5, 0.49709410246427403801),
    (1.0, 5.0, -0.32757913759146522204),
    (1.0, 7.75, 0.19160259218911780557),
    (1.0, 11.9, -0.22898324966192407078),
    (1.0, 12.1, -0.21574897337692477718),
    (1.0, 15.0, 0.20510403861352276115),
    (1.0, 19.0, -0.1057014311424092668),
    (1.0, 24.5, -0.15897841181932807879),
    (1.0, 30.0, -0.11875106261662293652),
    (1.0, 37.3, -0.12053182002408673868),
    (1.0, 44.0, -0.082803359376029170975),
    (1.0, 50.0, -0.097511828125175137661),
    (1.0, 63.2, -0.040129551842203625782),
    (1.0, 75.0, -0.085139995044829103941),
    (1.0, 88.8, 0.0045895786561426545544),
    (1.0, 100.0, -0.077145352014112158033),
    (2.0, 0.01, 0.000012499895833658853624),
    (2.0, 0.5, 0.030604023458682641307),
    (2.0, 1.0, 0.11490348493190048047),
    (2.0, 2.5, 0.44605905843961722674),
    (2.0, 5.0, 0.046565116277752215532),
    (2.0, 7.75, -0.1757882388777537152),
    (2.0, 11.9, -0.063534021474702852935),
    (2.0, 12.1, -0.10532776094183627729),
    (2.0, 15.0, 0.04157167797525047472),
    (2.0, 19.0, -0.15775590609569428497),
    (2.0, 24.5, -0.036675263270339582013),
    (2.0, 30.0, 0.078451246073265348901),
    (2.0, 37.3, -0.055274789536133374279),
    (2.0, 44.0, -0.090070488394833359614),
    (2.0, 50.0, -0.059712800794258820511),
    (2.0, 63.2, -0.09294203129826960913),
    (2.0, 75.0, -0.036914313672959165576),
    (2.0, 88.8, -0.084466769753077584114),
    (2.0, 100.0, -0.021528757344505365585),
    (5.0, 0.01, 2.6041558159915984421e-14),
    (5.0, 0.5, 8.053627241357474086e-6),
    (5.0, 1.0, 0.00024975773021123443138),
    (5.0, 2.5, 0.019501625134503219886),
    (5.0, 5.0, 0.26114054612017009005),
    (5.0, 7.75, 0.23816026023600005214),
    (5.0, 11.9, -0.094538171508384770622),
    (5.0, 12.1, -0.051974469766596745778),
    (5.0, 15.0, 0.13045613456502955267),
    (5.0, 19.0, 0.0035723925109004855132),
    (5.0, 24.5, -0.1287808660288577387),
    (5.0, 30.0, -0.14324029551207707699),
    (5.0, 37.3, -0.098795159247603446108),
    (5.0, 44.0, -0.05638871874376097255),
    (5.0, 50.0, -0.081400247696569639644),
    (5.0, 63.2, -0.022070772327975106662),
    (5.0, 75.0, -0.078523977013751366956),
    (5.0, 88.8, 0.01595290894841099449),
    (5.0, 100.0, -0.074195736964513920834),
    (10.0, 0.01, 2.6911383392363444211e-30),
    (10.0, 0.5, 2.6131773608228030862e-13),
    (10.0, 1.0, 2.630615123687453207e-10),
    (10.0, 2.5, 2.2247284173983832948e-6),
    (10.0, 5.0, 0.0014678026473104741311),
    (10.0, 7.75, 0.049040783515235697332),
    (10.0, 11.9, 0.30203061136489390953),
    (10.0, 12.1, 0.29802036287199453532),
    (10.0, 15.0, -0.090071811047659053964),
    (10.0, 19.0, 0.091553331622639788228),
    (10.0, 24.5, -0.13476502858392043521),
    (10.0, 30.0, -0.12987689399858876819),
    (10.0, 37.3, -0.13138687280200405452),
    (10.0, 44.0, -0.11361705626455659109),
    (10.0, 50.0, -0.11384784914946938567),
    (10.0, 63.2, -0.094039100939881589746),
    (10.0, 75.0, -0.080417867891894454548),
    (10.0, 88.8, -0.069513178205442660101),
    (10.0, 100.0, -0.054732176935472014742),
    (25.0, 0.01, 1.9213390604843751301e-83),
    (25.0, 0.5, 5.7122935104690844918e-41),
    (25.0, 1.0, 1.9029517518913821233e-33),
    (25.0, 2.5, 1.6068527822054880171e-23),
    (25.0, 5.0, 4.4976606841340539904e-16),
    (25.0, 7.75, 1.8305111207820677023e-11),
    (25.0, 11.9, 3.672436385883005208e-7),
    (25.0, 12.1, 5.305500615235860656e-7),
    (25.0, 15.0, 0.000050597432322570077819),
    (25.0, 19.0, 0.0042368322549088610765),
    (25.0, 24.5, 0.12953615951915562334),
    (25.0, 30.0, 0.08429274064303172925),
    (25.0, 37.3, 0.1446021569631534591),
    (25.0, 44.0, 0.033830006898562445811),
    (25.0, 50.0, -0.098426751299835827662),
    (25.0, 63.2, -0.10396778807508952501),
    (25.0, 75.0, 0.011429199764401543615),
    (25.0, 88.8, -0.037573144784047845299),
    (25.0, 100.0, 0.078504273355993287089),
    (0.5, 0.01, 0.079787126279334219655),
    (0.5, 0.5, 0.54097378993452809133),
    (0.5, 1.0, 0.67139670714180309042),
    (0.5, 2.5, 0.30200490606236568126),
    (0.5, 5.0, -0.34216798479816180976),
    (0.5, 7.75, 0.28506055872049263151),
    (0.5, 11.9, -0.14297213406708074617),
    (0.5, 12.1, -0.10313819465555987942),
    (0.5, 15.0, 0.13396768882243934618),
    (0.5, 19.0, 0.027434614372855057217),
    (0.5, 24.5, -0.095325073857838390835),
    (0.5, 30.0, -0.14392965337039988914),
    (0.5, 37.3, -0.050767830022665390601),
    (0.5, 44.0, 0.0021292870962024968645),
    (0.5, 50.0, -0.029605831888924612568),
    (0.5, 63.2, 0.036120009307455937085),
    (0.5, 75.0, -0.035727009681702580969),
    (0.5, 88.8, 0.062789206850414289807),
    (0.5, 100.0, -0.040402132716252123744),
    (2.5, 0.01, 5.3191924109550804572e-7),
    (2.5, 0.5, 0.0092364078193797244999),
    (2.5, 1.0, 0.049496810228477942271),
    (2.5, 2.5, 0.32809141153443809388),
    (2.5, 5.0, 0.24037720111131735285),
    (2.5, 7.75, -0.28233785445726442649),
    (2.5, 11.9, 0.094107747102813585977),
    (2.5, 12.1, 0.050228216053957571318),
    (2.5, 15.0, -0.10088034979001177408),
    (2.5, 19.0, -0.055782365345567447301),
    (2.5, 24.5, 0.078931404905070272069),
    (2.5, 30.0, 0.14120285879928212036),
    (2.5, 37.3, 0.040976711664796231153),
    (2.5, 44.0, -0.010325995012149009937),
    (2.5, 50.0, 0.023037219509625530445),
    (2.5, 63.2, -0.040537815167126685588),
    (2.5, 75.0, 0.032311052119657130998),
    (2.5, 88.8, -0.064684361773760384899),
    (2.5, 100.0, 0.038325919332375405594),
    (7.5, 0.01, 3.9362228590503652543e-22),
    (7.5, 0.5, 2.1585465071766178464e-9),
    (7.5, 1.0, 3.821974121348042196e-7),
    (7.5, 2.5, 0.00031550517899598516895),
    (7.5, 5.0, 0.031940778293484687016),
    (7.5, 7.75, 0.25300862133398991235),
    (7.5, 11.9, -0.049129202522923127196),
    (7.5, 12.1, -0.087598393371552296986),
    (7.5, 15.0, -0.081212945103300846419),
    (7.5, 19.0, -0.013500314411470818892),
    (7.5, 24.5, 0.14349582169017056162),
    (7.5, 30.0, 0.13142029812318965145),
    (7.5, 37.3, 0.12381387013785750428),
    (7.5, 44.0, 0.096061544386450684538),
    (7.5, 50.0, 0.10856137065342746007),
    (7.5, 63.2, 0.069325665322668194696),
    (7.5, 75.0, 0.092334477550211506061),
    (7.5, 88.8, 0.034579868555192510828),
    (7.5, 100.0, 0.077399827825100083371),
    (0.3, 0.01, 0.22733294197947474125),
    (0.3, 0.5, 0.70026048850705466357),
    (0.3, 1.0, 0.74022247928102045053),
    (0.3, 2.5, 0.17564108274377366902),
    (0.3, 5.0, -0.29682911012576076084),
    (0.3, 7.75, 0.28071651349403065016),
    (0.3, 11.9, -0.08122067438924171553),
    (0.3, 12.1, -0.036262204172314017489),
    (0.3, 15.0, 0.080045072038934184517),
    (0.3, 19.0, 0.081319914903368519568),
    (0.3, 24.5, -0.050985950942624704506),
    (0.3, 30.0, -0.13011079142417547299),
    (0.3, 37.3, -0.011363836041530918456),
    (0.3, 44.0, 0.038981967038549251648),
    (0.3, 50.0, 0.0053100391078477326775),
    (0.3, 63.2, 0.063189237931902065353),
    (0.3, 75.0, -0.007833743084473868436),
    (0.3, 88.8, 0.077237773388240887719),
    (0.3, 100.0, -0.017225645932780617964),
];

/// (order, re z, im z, re J, im J)
pub const COMPLEX_VALUES: &[(f64, f64, f64, f64, f64)] = &[
    (0.0, 3.5, 2.0, -1.4778202577239130802, -0.27405036717801903029),
    (0.0, 20.0, -7.5, 134.21404661229215047, 80.244980866713970603),
    (1.0, -14.0, 3.0, -1.4848440463726681575, 1.4944942403612639497),
    (2.0, 0.5, 30.0, -643509716555.29303469, 345512060134.26550033),
    (2.5, 40.0, 12.0, -5768.3331158009419127, 7983.3968054516985713),
    (2.5, -8.0, -8.0, 197.16897505333500242, 216.82214536632495618),
    (1.0, 13.0, 0.25, -0.071998057867960838234, 0.05364249631424249971),
    (0.0, 0.0, 45.0, 2083414075177314816.2, 0.0),
    (5.0, 25.0, 1.0, -0.096943760475387807595, 0.17025476581798024845),
    (25.0, 40.0, 2.0, -0.069956374586703824232, -0.3185214042418982229),
];
