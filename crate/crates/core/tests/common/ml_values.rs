//! Frozen reference values from tests/oracle/ml_oracle.py (mpmath).

/// Complex value as (re, im).
pub type Pair = (f64, f64);

/// (α, β, z, value).
pub type Case = (f64, f64, (f64, f64), (f64, f64));

pub const ML_CASES: &[Case] = &[
    (0.5, 1.0, (0.5, 0.0), (1.952360489182557, 0.0)),
    (0.5, 1.0, (0.2269952498697734, 0.4455032620941839), (1.0157273615471234, 0.6554097139688589)),
    (0.5, 1.0, (0.3535533905932738, 0.35355339059327373), (1.295215356528549, 0.7057401872039087)),
    (0.5, 1.0, (-0.2938926261462365, 0.4045084971874737), (0.6568041904949791, 0.2583098847672634)),
    (0.5, 1.0, (-0.5, 6.123233995736766e-17), (0.6156903441929259, 3.139313629631385e-17)),
    (0.5, 1.0, (3.0, 0.0), (16205.988853999586, 0.0)),
    (0.5, 1.0, (1.3619714992186405, 2.6730195725651034), (-0.09117359999946126, 0.17597481565272763)),
    (0.5, 1.0, (2.121320343559643, 2.1213203435596424), (-1.9612102808302836, 0.9489978132742691)),
    (0.5, 1.0, (-1.7633557568774192, 2.4270509831248424), (0.11999125426625551, 0.14721069911039836)),
    (0.5, 1.0, (-3.0, 3.6739403974420594e-16), (0.17900115118138996, 1.997604425405757e-17)),
    (0.5, 1.0, (8.5, 0.0), (4.7731635244483685e+31, 0.0)),
    (0.5, 1.0, (3.858919247786148, 7.573555455601126), (-0.03059409627871001, 0.05920555770920037)),
    (0.5, 1.0, (6.0104076400856545, 6.010407640085654), (-2.047208256186388, 0.05986504895114987)),
    (0.5, 1.0, (-4.996174644486021, 6.876644452187053), (0.03945092997596404, 0.053547131306588454)),
    (0.5, 1.0, (-8.5, 1.0409497792752501e-15), (0.06592512249998035, 7.965435771042054e-18)),
    (0.5, 1.0, (15.0, 0.0), (1.0406110275769709e+98, 0.0)),
    (0.5, 1.0, (6.809857496093202, 13.365097862825516), (-0.017158728281840296, 0.033525781841977596)),
    (0.5, 1.0, (10.606601717798213, 10.606601717798211), (0.7079838791992622, -1.8336530961148259)),
    (0.5, 1.0, (-8.816778784387095, 12.135254915624213), (0.022187641270694034, 0.03040287625206918)),
    (0.5, 1.0, (-15.0, 1.83697019872103e-15), (0.03752960638850576, 4.575847649649843e-18)),
    (0.5, 1.0, (20.429572488279607, 40.09529358847655), (-0.005694986109107011, 0.011171518199970195)),
    (0.5, 1.0, (31.81980515339464, 31.819805153394636), (-0.4911367358596934, 1.9498465660762665)),
    (0.5, 1.0, (-26.450336353161287, 36.405764746872634), (0.007372328989572417, 0.010142129110389685)),
    (0.5, 1.0, (-45.0, 5.5109105961630896e-15), (0.012534452900894466, 1.534270658157121e-18)),
    (0.5, 0.5, (0.5, 0.0), (1.5403698281390348, 0.0)),
    (0.5, 0.5, (0.2269952498697734, 0.4455032620941839), (0.5027677042003685, 0.6012847447569999)),
    (0.5, 0.5, (0.3535533905932738, 0.35355339059327373), (0.772600528333027, 0.7074446169130181)),
    (0.5, 0.5, (-0.2938926261462365, 0.4045084971874737), (0.2666711318434587, 0.1897675056497764)),
    (0.5, 0.5, (-0.5, 6.123233995736766e-17), (0.25634441145129333, 2.2003592315933018e-17)),
    (0.5, 0.5, (3.0, 0.0), (48618.53075158231, 0.0)),
    (0.5, 0.5, (1.3619714992186405, 2.6730195725651034), (-0.030370387650947493, -0.004036133800512311)),
    (0.5, 0.5, (2.121320343559643, 2.1213203435596424), (-5.609294050468166, -2.1472268994312773)),
    (0.5, 0.5, (-1.7633557568774192, 2.4270509831248424), (-0.004685557439975218, 0.031640057883027886)),
    (0.5, 0.5, (-3.0, 3.6739403974420594e-16), (0.027186130003586436, 5.8358232892214886e-18)),
    (0.5, 0.5, (8.5, 0.0), (4.057188995781113e+32, 0.0)),
    (0.5, 0.5, (3.858919247786148, 7.573555455601126), (-0.0022671380412021365, -0.003236618560863461)),
    (0.5, 0.5, (6.0104076400856545, 6.010407640085654), (-12.100179907871434, -11.944742796239003)),
    (0.5, 0.5, (-4.996174644486021, 6.876644452187053), (-0.001138735929531907, 0.0037591990338921724)),
    (0.5, 0.5, (-8.5, 1.0409497792752501e-15), (0.003826042297923297, 9.185376611909147e-19)),
    (0.5, 0.5, (15.0, 0.0), (1.5609165413654563e+99, 0.0)),
    (0.5, 0.5, (6.809857496093202, 13.365097862825516), (-0.0007342661115295997, -0.0010222858994509863)),
    (0.5, 0.5, (10.606601717798213, 10.606601717798211), (27.522320691933615, -11.93952504980919)),
    (0.5, 0.5, (-8.816778784387095, 12.135254915624213), (-0.0003805947703275761, 0.0011972484727066548)),
    (0.5, 0.5, (-15.0, 1.83697019872103e-15), (0.0012454877201698007, 3.0305376066782847e-19)),
    (0.5, 0.5, (20.429572488279607, 40.09529358847655), (-8.185004480486464e-05, -0.00011279915651532544)),
    (0.5, 0.5, (31.81980515339464, 31.819805153394636), (-77.10742346674436, 46.41586257283274)),
    (0.5, 0.5, (-26.450336353161287, 36.405764746872634), (-4.2964357851339995e-05, 0.00013254852392703443)),
    (0.5, 0.5, (-45.0, 5.5109105961630896e-15), (0.00013920300750526964, 3.40696915760495e-20)),
    (0.7, 1.0, (0.5, 0.0), (1.8249850568512025, 0.0)),
    (0.7, 1.0, (0.2269952498697734, 0.4455032620941839), (1.0735845299439428, 0.629890639700551)),
    (0.7, 1.0, (0.2269952498697734, 0.4455032620941839), (1.0735845299439428, 0.629890639700551)),
    (0.7, 1.0, (-0.2938926261462365, 0.4045084971874737), (0.6580073587416019, 0.27678275168329614)),
    (0.7, 1.0, (-0.5, 6.123233995736766e-17), (0.6051475920595643, 3.3818691410221627e-17)),
    (0.7, 1.0, (3.0, 0.0), (174.19304297541547, 0.0)),
    (0.7, 1.0, (1.3619714992186405, 2.6730195725651034), (0.06837574794008074, -1.3486175947645491)),
    (0.7, 1.0, (1.3619714992186405, 2.6730195725651034), (0.06837574794008074, -1.3486175947645491)),
    (0.7, 1.0, (-1.7633557568774192, 2.4270509831248424), (0.060907271919850084, 0.1280893300396675)),
    (0.7, 1.0, (-3.0, 3.6739403974420594e-16), (0.13789710966502708, 1.8842973599454893e-17)),
    (0.7, 1.0, (8.5, 0.0), (2464841656.6207128, 0.0)),
    (0.7, 1.0, (3.858919247786148, 7.573555455601126), (-1.0915579386770733, 0.9765523534485738)),
    (0.7, 1.0, (3.858919247786148, 7.573555455601126), (-1.0915579386770733, 0.9765523534485738)),
    (0.7, 1.0, (-4.996174644486021, 6.876644452187053), (0.021853328709001463, 0.03546560249255851)),
    (0.7, 1.0, (-8.5, 1.0409497792752501e-15), (0.043125195634049644, 5.742733552507409e-18)),
    (0.7, 1.0, (15.0, 0.0), (8.867140661432548e+20, 0.0)),
    (0.7, 1.0, (6.809857496093202, 13.365097862825516), (-1.0526513949582603, -0.958530665117563)),
    (0.7, 1.0, (6.809857496093202, 13.365097862825516), (-1.0526513949582603, -0.958530665117563)),
    (0.7, 1.0, (-8.816778784387095, 12.135254915624213), (0.01270572154865832, 0.019178727489656034)),
    (0.7, 1.0, (-15.0, 1.83697019872103e-15), (0.023501440278040017, 3.0287426748474963e-18)),
    (0.7, 1.0, (45.0, 0.0), (1.1056760487533754e+100, 0.0)),
    (0.7, 1.0, (20.429572488279607, 40.09529358847655), (-1.1267095920358197, -0.8761566819028824)),
    (0.7, 1.0, (20.429572488279607, 40.09529358847655), (-1.1267095920358197, -0.8761566819028824)),
    (0.7, 1.0, (-26.450336353161287, 36.405764746872634), (0.0043242339241785855, 0.0061361583189523785)),
    (0.7, 1.0, (-45.0, 5.5109105961630896e-15), (0.007561973563660925, 9.42564410644554e-19)),
    (0.7, 0.7, (0.5, 0.0), (1.6711092247431754, 0.0)),
    (0.7, 0.7, (0.2269952498697734, 0.4455032620941839), (0.8099173426796052, 0.6633493363205463)),
    (0.7, 0.7, (0.2269952498697734, 0.4455032620941839), (0.8099173426796052, 0.6633493363205463)),
    (0.7, 0.7, (-0.2938926261462365, 0.4045084971874737), (0.4215206662477157, 0.259236231957211)),
    (0.7, 0.7, (-0.5, 6.123233995736766e-17), (0.3866108008225271, 3.068470344019725e-17)),
    (0.7, 0.7, (3.0, 0.0), (279.09477834069145, 0.0)),
    (0.7, 0.7, (1.3619714992186405, 2.6730195725651034), (1.2175370085527168, -1.953857170456281)),
    (0.7, 0.7, (1.3619714992186405, 2.6730195725651034), (1.2175370085527168, -1.953857170456281)),
    (0.7, 0.7, (-1.7633557568774192, 2.4270509831248424), (-0.021943473286081275, 0.04049074866754854)),
    (0.7, 0.7, (-3.0, 3.6739403974420594e-16), (0.035901729730841235, 8.885307726128276e-18)),
    (0.7, 0.7, (8.5, 0.0), (6167532146.863416, 0.0)),
    (0.7, 0.7, (3.858919247786148, 7.573555455601126), (-3.463700336470892, 0.8858273671127868)),
    (0.7, 0.7, (3.858919247786148, 7.573555455601126), (-3.463700336470892, 0.8858273671127868)),
    (0.7, 0.7, (-4.996174644486021, 6.876644452187053), (-0.001626761879458755, 0.0032707383537528673)),
    (0.7, 0.7, (-8.5, 1.0409497792752501e-15), (0.003861774666549242, 1.0184943343915865e-18)),
    (0.7, 0.7, (15.0, 0.0), (2.830236378340687e+21, 0.0)),
    (0.7, 0.7, (6.809857496093202, 13.365097862825516), (-1.5471761619709599, -4.290273716452487)),
    (0.7, 0.7, (6.809857496093202, 13.365097862825516), (-1.5471761619709599, -4.290273716452487)),
    (0.7, 0.7, (-8.816778784387095, 12.135254915624213), (-0.0004310843395273296, 0.0010223238680924292)),
    (0.7, 0.7, (-15.0, 1.83697019872103e-15), (0.001154139503117338, 2.9677318359269497e-19)),
    (0.7, 0.7, (45.0, 0.0), (5.651289436939506e+100, 0.0)),
    (0.7, 0.7, (20.429572488279607, 40.09529358847655), (-3.0673210534994113, -6.62626737856148)),
    (0.7, 0.7, (20.429572488279607, 40.09529358847655), (-3.0673210534994113, -6.62626737856148)),
    (0.7, 0.7, (-26.450336353161287, 36.405764746872634), (-3.967496563902842e-05, 0.00011114484600082127)),
    (0.7, 0.7, (-45.0, 5.5109105961630896e-15), (0.00011972523885808686, 2.98405324084129e-20)),
    (0.9, 0.9, (0.5, 0.0), (1.6742480910659137, 0.0)),
    (0.9, 0.9, (0.2269952498697734, 0.4455032620941839), (1.0500610333766598, 0.5984247403091878)),
    (0.9, 0.9, (0.07821723252011546, 0.4938441702975689), (0.8553577151563686, 0.5476713352079863)),
    (0.9, 0.9, (-0.2938926261462365, 0.4045084971874737), (0.5979136087976411, 0.2932820251804716)),
    (0.9, 0.9, (-0.5, 6.123233995736766e-17), (0.5319023515684373, 3.6203715877639396e-17)),
    (0.9, 0.9, (3.0, 0.0), (37.227740541104374, 0.0)),
    (0.9, 0.9, (1.3619714992186405, 2.6730195725651034), (-3.9470588236023123, -0.665849117230347)),
    (0.9, 0.9, (0.46930339512069275, 2.9630650217854133), (-1.1571054590396495, -0.5005467592892936)),
    (0.9, 0.9, (-1.7633557568774192, 2.4270509831248424), (-0.08158961756818768, 0.06344110417937401)),
    (0.9, 0.9, (-3.0, 3.6739403974420594e-16), (0.044151271783037724, 1.3933082153893652e-17)),
    (0.9, 0.9, (8.5, 0.0), (67836.58124743284, 0.0)),
    (0.9, 0.9, (3.858919247786148, 7.573555455601126), (-38.04249015722749, -41.50488695083637)),
    (0.9, 0.9, (1.3296929528419628, 8.395350895058671), (-0.08090474520855784, -1.4078127901122472)),
    (0.9, 0.9, (-4.996174644486021, 6.876644452187053), (-0.00077427980912211, 0.0014705657027695416)),
    (0.9, 0.9, (-8.5, 1.0409497792752501e-15), (0.002190227240708704, 7.181830597271454e-19)),
    (0.9, 0.9, (15.0, 0.0), (950269566.4573417, 0.0)),
    (0.9, 0.9, (6.809857496093202, 13.365097862825516), (1460.7618847784295, 478.29826922518157)),
    (0.9, 0.9, (2.346516975603464, 14.815325108927066), (-0.004440983442003328, 1.5009819375678006)),
    (0.9, 0.9, (-8.816778784387095, 12.135254915624213), (-0.0002336786104117011, 0.00041039110913163154)),
    (0.9, 0.9, (-15.0, 1.83697019872103e-15), (0.0005419957097958992, 1.523858578142724e-19)),
    (0.9, 0.9, (45.0, 0.0), (1.152850402769516e+30, 0.0)),
    (0.9, 0.9, (20.429572488279607, 40.09529358847655), (-7181934287.614805, 26113843325.75801)),
    (0.9, 0.9, (7.039550926810391, 44.4459753267812), (1.6361724634938888, -0.4466787617631611)),
    (0.9, 0.9, (-26.450336353161287, 36.405764746872634), (-1.7920188692330486e-05, 4.531738491974584e-05)),
    (0.9, 0.9, (-45.0, 5.5109105961630896e-15), (5.044546300148398e-05, 1.2850453954616313e-20)),
    (0.9, 1.5, (0.5, 0.0), (1.6427066600516884, 0.0)),
    (0.9, 1.5, (0.2269952498697734, 0.4455032620941839), (1.2399607162894473, 0.4291979920461427)),
    (0.9, 1.5, (0.07821723252011546, 0.4938441702975689), (1.0974040258332634, 0.41088535631228346)),
    (0.9, 1.5, (-0.2938926261462365, 0.4045084971874737), (0.8765287742232558, 0.24309308466785626)),
    (0.9, 1.5, (-0.5, 6.123233995736766e-17), (0.8049077160331696, 3.144261369289252e-17)),
    (0.9, 1.5, (3.0, 0.0), (17.69114358447828, 0.0)),
    (0.9, 1.5, (1.3619714992186405, 2.6730195725651034), (-1.7328859028599632, 1.2133269490500649)),
    (0.9, 1.5, (0.46930339512069275, 2.9630650217854133), (-0.5729211016123618, 0.517541167822786)),
    (0.9, 1.5, (-1.7633557568774192, 2.4270509831248424), (0.14033886097021392, 0.24103802767308125)),
    (0.9, 1.5, (-3.0, 3.6739403974420594e-16), (0.2469590304382607, 3.04436256801505e-17)),
    (0.9, 1.5, (8.5, 0.0), (16287.307671880253, 0.0)),
    (0.9, 1.5, (3.858919247786148, 7.573555455601126), (-13.49304527216014, -1.2259141327628027)),
    (0.9, 1.5, (1.3296929528419628, 8.395350895058671), (-0.2998229523901961, -0.10627301578385338)),
    (0.9, 1.5, (-4.996174644486021, 6.876644452187053), (0.04516087774210773, 0.06698441626601932)),
    (0.9, 1.5, (-8.5, 1.0409497792752501e-15), (0.08255622375482286, 1.0583593100777488e-17)),
    (0.9, 1.5, (15.0, 0.0), (156237751.8672051, 0.0)),
    (0.9, 1.5, (6.809857496093202, 13.365097862825516), (231.07997218120525, -102.22579646807792)),
    (0.9, 1.5, (2.346516975603464, 14.815325108927066), (0.19133300651228885, 0.18946583252917917)),
    (0.9, 1.5, (-8.816778784387095, 12.135254915624213), (0.025934226059183944, 0.03721052634560047)),
    (0.9, 1.5, (-15.0, 1.83697019872103e-15), (0.04585918115535412, 5.758205871938914e-18)),
    (0.9, 1.5, (45.0, 0.0), (9.112368619310143e+28, 0.0)),
    (0.9, 1.5, (20.429572488279607, 40.09529358847655), (959282624.8701694, 1913768230.0594409)),
    (0.9, 1.5, (7.039550926810391, 44.4459753267812), (0.04501394700660762, -0.1106804596748008)),
    (0.9, 1.5, (-26.450336353161287, 36.405764746872634), (0.008733664345876222, 0.012181633851470482)),
    (0.9, 1.5, (-45.0, 5.5109105961630896e-15), (0.015038778203968465, 1.856269419744838e-18)),
    (0.3, 1.0, (0.5, 0.0), (2.0620157899559994, 0.0)),
    (0.3, 1.0, (0.2269952498697734, 0.4455032620941839), (0.9671971349053777, 0.6386310012441175)),
    (0.3, 1.0, (0.44550326209418395, 0.22699524986977337), (1.633437401986895, 0.6791404661089883)),
    (0.3, 1.0, (-0.2938926261462365, 0.4045084971874737), (0.6684981165586825, 0.2402977092655218)),
    (0.3, 1.0, (-0.5, 6.123233995736766e-17), (0.6326490059435991, 2.934182296032009e-17)),
    (0.3, 1.0, (2.0, 0.0), (79485.90762518356, 0.0)),
    (0.3, 1.0, (0.9079809994790936, 1.7820130483767356), (-0.08774543262474076, 0.44895760797027134)),
    (0.3, 1.0, (1.7820130483767358, 0.9079809994790935), (-3.06540506537742, -1.7688439958560218)),
    (0.3, 1.0, (-1.175570504584946, 1.618033988749895), (0.24230019143753642, 0.2089312785542797)),
    (0.3, 1.0, (-2.0, 2.4492935982947064e-16), (0.29023222616787536, 2.6176743050897456e-17)),
    (0.3, 1.0, (5.0, 0.0), (2.2491502775548076e+93, 0.0)),
    (0.3, 1.0, (2.269952498697734, 4.455032620941839), (-0.058528988150152755, 0.15206428854321194)),
    (0.3, 1.0, (4.455032620941839, 2.2699524986977337), (3.161709342681655, 0.4797538938319771)),
    (0.3, 1.0, (-2.938926261462365, 4.045084971874737), (0.09512421726437205, 0.10768192120069951)),
    (0.3, 1.0, (-5.0, 6.123233995736766e-16), (0.13708086902027064, 1.4849048186763337e-17)),
    (0.3, 1.0, (3.6319239979163744, 7.128052193506942), (-0.03938135108921518, 0.09151458856808543)),
    (0.3, 1.0, (7.128052193506943, 3.631923997916374), (3.2011845095431237, -0.47887088113976983)),
    (0.3, 1.0, (-4.702282018339784, 6.47213595499958), (0.05855063292352247, 0.07125427583582639)),
    (0.3, 1.0, (-8.0, 9.797174393178826e-16), (0.08949309581862072, 1.015898869366283e-17)),
    (0.3, 0.3, (0.5, 0.0), (1.1694769581219358, 0.0)),
    (0.3, 0.3, (0.2269952498697734, 0.4455032620941839), (0.22907355986366298, 0.38781669286886716)),
    (0.3, 0.3, (0.44550326209418395, 0.22699524986977337), (0.723936094259566, 0.5677216835755623)),
    (0.3, 0.3, (-0.2938926261462365, 0.4045084971874737), (0.14422176182166124, 0.10814083090220829)),
    (0.3, 0.3, (-0.5, 6.123233995736766e-17), (0.14375650014722127, 1.2534624073793659e-17)),
    (0.3, 0.3, (2.0, 0.0), (400586.43366882275, 0.0)),
    (0.3, 0.3, (0.9079809994790936, 1.7820130483767356), (-0.08253196945818554, -0.033279626393442105)),
    (0.3, 0.3, (1.7820130483767358, 0.9079809994790935), (3.111370598698736, -16.594471420058866)),
    (0.3, 0.3, (-1.175570504584946, 1.618033988749895), (0.0068729511329260395, 0.0388804411176091)),
    (0.3, 0.3, (-2.0, 2.4492935982947064e-16), (0.032062399218847494, 5.668541638765876e-18)),
    (0.3, 0.3, (5.0, 0.0), (9.614982187699846e+94, 0.0)),
    (0.3, 0.3, (2.269952498697734, 4.455032620941839), (-0.00769182193392847, -0.007030871879885754)),
    (0.3, 0.3, (4.455032620941839, 2.2699524986977337), (49.20869812326152, 133.72418621062187)),
    (0.3, 0.3, (-2.938926261462365, 4.045084971874737), (-0.0009389072413380858, 0.007985818964771497)),
    (0.3, 0.3, (-5.0, 6.123233995736766e-16), (0.007275100803154912, 1.5674898061015247e-18)),
    (0.3, 0.3, (3.6319239979163744, 7.128052193506942), (-0.002657558974542027, -0.002820692560997802)),
    (0.3, 0.3, (7.128052193506943, 3.631923997916374), (251.52367130272953, 344.6433096241013)),
    (0.3, 0.3, (-4.702282018339784, 6.47213595499958), (-0.0006333029477103801, 0.003252306379791675)),
    (0.3, 0.3, (-8.0, 9.797174393178826e-16), (0.0031107914239239982, 7.044986572887954e-19)),
    (0.6, 2.2, (0.5, 0.0), (1.316389004231966, 0.0)),
    (0.6, 2.2, (0.2269952498697734, 0.4455032620941839), (0.9725434496410406, 0.3252903357292192)),
    (0.6, 2.2, (0.29389262614623657, 0.4045084971874737), (1.033579358352401, 0.3236790435131321)),
    (0.6, 2.2, (-0.2938926261462365, 0.4045084971874737), (0.7225415176004991, 0.16986533133954362)),
    (0.6, 2.2, (-0.5, 6.123233995736766e-17), (0.6762531959650445, 2.1827295858086887e-17)),
    (0.6, 2.2, (3.0, 0.0), (94.49923182251108, 0.0)),
    (0.6, 2.2, (1.3619714992186405, 2.6730195725651034), (-0.11671508292720066, 0.3988750211338492)),
    (0.6, 2.2, (1.7633557568774194, 2.4270509831248424), (-0.23583274976034155, 0.24072546715642829)),
    (0.6, 2.2, (-1.7633557568774192, 2.4270509831248424), (0.2357473734491812, 0.20127236807213372)),
    (0.6, 2.2, (-3.0, 3.6739403974420594e-16), (0.27969203805282866, 2.497465019652956e-17)),
    (0.6, 2.2, (8.5, 0.0), (54706223015498.65, 0.0)),
    (0.6, 2.2, (3.858919247786148, 7.573555455601126), (-0.05092171390790766, 0.12843504040789114)),
    (0.6, 2.2, (4.996174644486022, 6.876644452187053), (-0.08411863880074814, 0.13983023322267768)),
    (0.6, 2.2, (-4.996174644486021, 6.876644452187053), (0.08094376760046226, 0.09357000953938983)),
    (0.6, 2.2, (-8.5, 1.0409497792752501e-15), (0.11858893290249535, 1.3017338531702817e-17)),
    (0.6, 2.2, (15.0, 0.0), (3.102185038666452e+37, 0.0)),
    (0.6, 2.2, (6.809857496093202, 13.365097862825516), (-0.03112959261740465, 0.07005761344388746)),
    (0.6, 2.2, (8.816778784387097, 12.135254915624213), (-0.040978530526542184, 0.07191033729305357)),
    (0.6, 2.2, (-8.816778784387095, 12.135254915624213), (0.04509923273848189, 0.05617471849666746)),
    (0.6, 2.2, (-15.0, 1.83697019872103e-15), (0.0703039280102591, 8.099292103943754e-18)),
    (0.6, 2.2, (45.0, 0.0), (1.4678328075024038e+244, 0.0)),
    (0.6, 2.2, (20.429572488279607, 40.09529358847655), (-0.010995857074339413, 0.02255860750941863)),
    (0.6, 2.2, (26.45033635316129, 36.405764746872634), (-0.014762440392766267, 0.021357877703884542)),
    (0.6, 2.2, (-26.450336353161287, 36.405764746872634), (0.014766407050651398, 0.019652548891124402)),
    (0.6, 2.2, (-45.0, 5.5109105961630896e-15), (0.024381715594122066, 2.926649254841905e-18)),
];
pub const ML_HALF: &[(f64, Pair, Pair)] = &[
    (1.0, (-100.0, 0.0), (0.005641613782989433, 0.0)),
    (1.0, (-55.0, 0.0), (0.010256297732270069, 0.0)),
    (1.0, (-20.0, 0.0), (0.02817434874105132, 0.0)),
    (1.0, (-30.0, 30.0), (0.009405769534934072, 0.009400545563354871)),
    (1.0, (0.0, 50.0), (0.0, 0.011286049784700271)),
    (1.0, (4.0, 3.0), (930.2465952058438, -1986.10892633306)),
    (0.5, (-100.0, 0.0), (2.8205248812996592e-05, 0.0)),
    (0.5, (-55.0, 0.0), (9.320827290251673e-05, 0.0)),
    (0.5, (-20.0, 0.0), (0.0007026087267299006, 0.0)),
    (0.5, (-30.0, 30.0), (1.3059908793964222e-07, 0.00015671914737603538)),
    (0.5, (0.0, 50.0), (-0.00011290568725728185, 0.0)),
    (0.5, (4.0, 3.0), (9679.877349406102, -5153.695919714709)),
];
pub const PRABHAKAR2: &[Case] = &[
    (0.5, -0.5, (-4.0, 0.0), (0.01732162682820024, 0.0)),
    (0.5, 0.5, (-3.0, 0.0), (-0.020466983476027573, 0.0)),
    (0.7, 1.2, (2.0, -1.5), (-54.047611896654274, 25.34586706353431)),
    (0.9, 0.9, (-6.0, 4.0), (0.0036585735957233036, -0.004519458527738948)),
    (0.5, 1.0, (0.0, 8.0), (-2.0368398309967244e-26, -0.0011568547849711184)),
    (0.8, 1.8, (-10.0, 0.0), (0.0028462601071181704, 0.0)),
];
pub const GAMMA: &[(f64, f64)] = &[
    (0.001, 999.4237724845955),
    (0.037, 26.48521204855819),
    (0.5, 1.772453850905516),
    (0.999, 1.0005782056293586),
    (1.5, 0.886226925452758),
    (2.25, 1.1330030963193463),
    (7.7, 2769.8303623273146),
    (13.903132240936914, 4840932561.56004),
    (33.3, 7.487577596522633e+35),
    (99.5, 9.367802114655996e+154),
    (141.2, 3.619988814401908e+241),
    (169.9, 2.555223269296777e+304),
    (-0.5, -3.544907701811032),
    (-2.7, -0.931082784838964),
    (-7.25, 0.0005303977063521478),
];
