"""Half-range Gauss-Hermite nodes and weights, generated by plcrf.quadgen.

Do not edit by hand; run ``plcrf quadtable regen --order N --write``.
"""

RULES = {
    1: (
        (0.5641895835477563,),
        (0.886226925452758,),
    ),
    2: (
        (0.3001939310608394, 1.2524210453337172,),
        (0.6405291796843786, 0.2456977457683794,),
    ),
    3: (
        (0.19055414979819202, 0.8482518675445767, 1.7997765784157278,),
        (0.4460297704666581, 0.3964682669983355, 0.04372888798776444,),
    ),
    4: (
        (0.13377644699606764, 0.62432469018719, 1.3425378256449922, 2.262664477010362,),
        (0.32530299975691906, 0.4211071018520622, 0.13344250035751953, 0.006374323486257276,),
    ),
    5: (
        (0.10024215196821559, 0.4828139660462007, 1.0609498215257172, 1.7797294185202612, 2.6697603560876564,),
        (0.24840615202844263, 0.39233106665239914, 0.21141819307605672, 0.033246660351343924, 0.0008248533445156284,),
    ),
    6: (
        (0.07860065941309792, 0.3867394102706306, 0.8664294716820439, 1.4656980496635164, 2.172707796938999, 3.036820169322866,),
        (0.19684967548859822, 0.3491542015253951, 0.2572595205844211, 0.07601313758400571, 0.006851918625135966, 9.847164520192669e-05,),
    ),
    7: (
        (0.06371648460670079, 0.3181920188886186, 0.724198989258373, 1.238035599215089, 1.8385282202709465, 2.531488151327676, 3.3734564301245826,),
        (0.16060996514926068, 0.30631980815809934, 0.2755271417849055, 0.1206301931307841, 0.0218922863438067, 0.0012364467283105653, 1.1084157591105907e-05,),
    ),
    8: (
        (0.05297864393185113, 0.26739837216776535, 0.6163028841823999, 1.064246312116224, 1.5888558622700553, 2.1839211530958584, 2.863133883708075, 3.686007162724397,),
        (0.13410918845335956, 0.26833075447263904, 0.27595339798842183, 0.15744828261879035, 0.04481410991746293, 0.005367935756025333, 0.00020206364913241077, 1.1925969265953436e-06,),
    ),
    9: (
        (0.0449390308011905, 0.22860530556052255, 0.5321958443316226, 0.927280745338049, 1.392923855195846, 1.9188430991973946, 2.5062478340056997, 3.172692133481198, 3.9788988697897403,),
        (0.11408897024211129, 0.23594079122367592, 0.26642547363025226, 0.18325167910167112, 0.07134404930669841, 0.01398141841556245, 0.0011638527207854237, 3.05670214897907e-05, 1.2379051133753366e-07,),
    ),
    10: (
        (0.03873852432569939, 0.19823330401294884, 0.4652011118145069, 0.8168618855919073, 1.23454132402774, 1.706798149688649, 2.22994008892444, 2.8091037468982534, 3.4638724194953725, 4.255361806365612,),
        (0.09855209751903617, 0.2086780666080757, 0.25205168840372505, 0.19868434003846, 0.09719842276015497, 0.027024416435587183, 0.003804649622503724, 0.00022888624304529751, 4.345344798459452e-06, 1.2477371481832517e-08,),
    ),
    11: (
        (0.03383932123177446, 0.1739557277102363, 0.4108738409723874, 0.726271784259897, 1.1038632464649074, 1.5322950345753714, 2.0057829024681366, 2.5243521415192083, 3.0953517098692247, 3.7394786099435775, 4.517835967187362,),
        (0.08622070553482039, 0.1857673189544318, 0.23582612412915618, 0.2058503268421006, 0.1195811706164384, 0.043144327588778855, 0.008867649894959827, 0.0009271418751115549, 4.157193216836889e-05, 5.868576468647473e-07, 1.2271451400088172e-09,),
    ),
    12: (
        (0.029889700769664386, 0.15420487826582524, 0.3661439629743124, 0.6508810158452045, 0.994366869880792, 1.3858912036495648, 1.8188486084282318, 2.2908427386728545, 2.8040967933936236, 3.3672707041629266, 4.001683475673482, 4.7682162879898575,),
        (0.07624614679304309, 0.16644606887947377, 0.21939489812870738, 0.2070165086790944, 0.1372643627964736, 0.060505674348916426, 0.016553801956407495, 0.0025860837883566728, 0.00020623754106748873, 7.066509867527056e-06, 7.591315472565979e-08, 1.1819541716677228e-10,),
    ),
    13: (
        (0.026651126622384697, 0.13789185546993907, 0.3288286751583444, 0.5873785314737064, 0.9014808845353924, 1.2612965025823784, 1.6600371319054403, 2.094109004187487, 2.563207025254677, 3.0709123410296413, 3.62669201180255, 4.2522074004793184, 5.008008343237774,),
        (0.06804639044185624, 0.15005721170663996, 0.20360663969174422, 0.20410435519872924, 0.15011922825111923, 0.07745363156328891, 0.026489166729250817, 0.005623430312110253, 0.000683241179366847, 4.24853319211805e-05, 1.135571013605639e-06, 9.464536459063705e-09, 1.1181046169937728e-11,),
    ),
    14: (
        (0.02395678924410742, 0.12424034410991384, 0.2973385689164815, 0.533329214443288, 0.8218731891169354, 1.154067073874413, 1.5232747914457243, 1.9253382104771044, 2.358600766644775, 2.8240937548449714, 3.326269358705141, 3.8751049909875763, 4.492438071606916, 5.238431362675289,),
        (0.061210981219602965, 0.13606205863851945, 0.18885680174204586, 0.19857782879309543, 0.15861733922575955, 0.09281678480329347, 0.03793164029294467, 0.010256391556866733, 0.0017227719130107166, 0.0001659563530552859, 8.195893956404785e-06, 1.7387662637652182e-07, 1.1429399163905592e-09, 1.0412002369165519e-12,),
    ),
    15: (
        (0.021686942698851217, 0.11268419695264204, 0.2704926203889976, 0.4869022892342736, 0.7530435742305187, 1.060930872005833, 1.4042548093705782, 1.778646218520443, 2.1817079628455134, 2.613060672513555, 3.0746179394974993, 3.5714079774673486, 4.113735918455993, 4.7235128949706535, 5.460488773864857,),
        (0.05544335429971261, 0.12402771569560285, 0.17529092095371612, 0.19148833259239612, 0.16347380949694648, 0.10593766037807834, 0.05002704004358421, 0.016442978004616526, 0.0035732067930689245, 0.00048289694247755386, 3.749090518569465e-05, 1.493685973281742e-06, 2.552708581326493e-08, 1.3421789241148725e-10, 9.562291451848748e-14,),
    ),
    16: (
        (0.01975365846007727, 0.10280224523791745, 0.2473976694524551, 0.4466962259616832, 0.6930737203019995, 0.9794041703307299, 1.299789321277036, 1.6498542403974343, 2.026808152168867, 2.429450491602143, 2.858266528543266, 3.3157692750386984, 3.807377116755898, 4.343606345470173, 4.946377204048386, 5.675017934041922,),
        (0.0505246320213779, 0.11360855689415103, 0.16292129231454497, 0.18356280111624623, 0.16543863775560982, 0.11657249055350331, 0.06199969609915657, 0.02391970961868355, 0.006409914424050133, 0.0011356953106887782, 0.00012528622132956243, 7.950495719622457e-06, 2.5900076194150643e-07, 3.6115491397427823e-09, 1.537677916189839e-11, 8.674204452494624e-15,),
    ),
    17: (
        (0.01809108332912618, 0.09427561332967309, 0.22736767914088762, 0.41162154321891187, 0.6404653042586672, 0.9075572451603563, 1.2074425053077742, 1.5358609037651607, 1.8898368986846548, 2.2676843544391008, 2.669032183793362, 3.094965841562242, 3.5484156075716564, 4.035068908990516, 4.565576525100969, 5.161826321619213, 5.882726076899503,),
        (0.04629021825694442, 0.10452858743438649, 0.15169284403865402, 0.1752895232522234, 0.16519411356047256, 0.12475891273155017, 0.0732500435683077, 0.03228908736178786, 0.010292162693211206, 0.002276385688421553, 0.0003330379628636381, 3.0370748625599827e-05, 1.594682391054311e-06, 4.297674004833089e-08, 4.944542814585089e-10, 1.7232628320869637e-12, 7.782008254119887e-16,),
    ),
    18: (
        (0.016649032220237232, 0.08685906210840866, 0.20986834813036415, 0.3808200110688891, 0.5940307207535671, 0.8438630216354202, 1.1253073763927297, 1.4342877104861853, 1.767773935644937, 2.123798695121889, 2.5014594587764925, 2.900972235638906, 3.323848568942007, 3.773315134350057, 4.25524711266144, 4.7803780609304285, 5.370536579819724, 6.084216863903428,),
        (0.042614261981440235, 0.0965666206000141, 0.14151980580033313, 0.16698776691226005, 0.16331599698212448, 0.13069946689822395, 0.08337822862687393, 0.04111123055864269, 0.015157653987453105, 0.0040332690574747315, 0.0007444341834037385, 9.094629235511983e-05, 6.932231790812822e-06, 3.0441737993016986e-07, 6.857062267327952e-09, 6.573629561310576e-11, 1.8934065417342858e-13, 6.91219900671972e-17,),
    ),
    19: (
        (0.015388666013620515, 0.08036131828245434, 0.19447832681045216, 0.3536075958560737, 0.5528168629126664, 0.7870949226367957, 1.051862150452104, 1.3432640004529912, 1.6582983073212607, 1.99484680375345, 2.3516737067672437, 2.7284415370144175, 3.1257901534521344, 3.545539599183655, 3.9911305598020905, 4.468570028668009, 4.988638745306202, 5.573088617571978, 6.280010370943142,),
        (0.03939909866823789, 0.08954443676281226, 0.13230574400046347, 0.1588598682280143, 0.16026845044102744, 0.13467575861749065, 0.09216417769647486, 0.04997389161939885, 0.02084598434796373, 0.0064843544666263134, 0.001454093935757139, 0.00022620286996988256, 2.330759447069165e-05, 1.4995438895374505e-06, 5.559539427469901e-08, 1.0562348832249005e-09, 8.511378249088028e-12, 2.0434715306049983e-14, 6.084187997702062e-18,),
    ),
    20: (
        (0.014279509699916749, 0.07463130039219137, 0.18086156305803827, 0.3294333560642883, 0.5160505430615303, 0.7362554575808908, 0.9858735750375272, 1.2612890161027661, 1.55957964520966, 1.8785619193029803, 2.2167941653876455, 2.5735778208262787, 2.948989746787233, 3.3439813798616393, 3.7605999329107744, 4.202442600421138, 4.675608847794477, 5.190901686975001, 5.769985165567756, 6.470558387064576,),
        (0.03656792163200836, 0.08331753440167762, 0.12395417854119237, 0.15102858000702282, 0.15641446700455092, 0.13699223495513455, 0.09952924724722005, 0.05853377069790625, 0.027135780375560487, 0.009644733659215405, 0.002551715091568813, 0.000486448997660902, 6.435145179989624e-05, 5.642391489526091e-06, 3.090836522327705e-07, 9.756411053420914e-09, 1.576086717392721e-10, 1.075945746737234e-12, 2.169863546275847e-15, 5.31122306167734e-19,),
    ),
    21: (
        (0.013297353547851306, 0.06954829922320925, 0.16874726181418054, 0.3078493195944617, 0.48309855742468216, 0.6905248542201388, 0.9263294551352191, 1.187139349331604, 1.470144597517616, 1.7731536057327524, 2.094603794293004, 2.433559331265758, 2.789721552460085, 3.163476057144661, 3.5560070547412237, 3.969531447848224, 4.407761959025705, 4.876862339948888, 5.3876402167523185, 5.961664823374489, 6.656256300214827,),
        (0.03405959773256939, 0.07776797123705881, 0.11637389899412708, 0.14356320978035753, 0.152031782437035, 0.13794301452891164, 0.10549518172054381, 0.06653293921962404, 0.03378235882258658, 0.013468203308514615, 0.004106848761662462, 0.0009311910683981641, 0.00015211674058801625, 1.7250991699525202e-05, 1.2974482494988576e-06, 6.098645835088596e-08, 1.6513914766749101e-09, 2.2848752317696448e-11, 1.3307744387064709e-13, 2.270100798985522e-16, 4.6014015376963833e-20,),
    ),
    22: (
        (0.012422748986718796, 0.06501486260569994, 0.15791514821079286, 0.28848807793953213, 0.45343793514606023, 0.6492232300351485, 0.8723901234356048, 1.1198045053194718, 1.3887874266205007, 1.6771776613815552, 1.9833499203407983, 2.306214177630574, 2.645216733567773, 3.000360731238407, 3.3722652568877662, 3.7622909086516603, 4.172782855834457, 4.607539598805749, 5.072768657104969, 5.579269634848438, 6.148512873675636, 6.8374524550438105,),
        (0.0318249364934948, 0.07279883506833704, 0.1094813277951513, 0.1364976469061127, 0.14732928653084695, 0.13779467958394995, 0.11014820870980911, 0.07379806432217757, 0.04054811641498521, 0.017859117881137514, 0.0061583038694785555, 0.0016216359871201332, 0.0003173414675527978, 4.474583825197574e-05, 4.382009595311325e-06, 2.8473576961959015e-07, 1.1565275883546774e-08, 2.704691669936868e-10, 3.2262604486835553e-12, 1.6134123981617486e-14, 2.3428089945738965e-17, 3.958675620024285e-21,),
    ),
    23: (
        (0.011639913042802687, 0.06095156293351585, 0.1481844854811852, 0.2710458995899118, 0.4266334330714666, 0.611782184719005, 0.8233526552175753, 1.05844064446513, 1.3145079167324476, 1.5894492069171209, 1.8816170221489599, 2.1898246503037218, 2.5133442866879547, 2.8519142275424145, 3.2057684283115786, 3.5757049442867275, 3.9632196990789796, 4.370755750129022, 4.802175424552165, 5.263714868608318, 5.766156567637221, 6.330869872884949, 7.014455609154171,),
        (0.02982396299488901, 0.06832996608566681, 0.10320126845703324, 0.12984267897236546, 0.14246175988111115, 0.1367792294645471, 0.11361099135407336, 0.08022992426639836, 0.04722287047652215, 0.022689177054012133, 0.008709868764121125, 0.002612326565177537, 0.0005977191245718323, 0.00010161108411616774, 1.2449084735144608e-05, 1.0597820616940415e-06, 5.98828034981516e-08, 2.115121693516648e-09, 4.298390657524247e-11, 4.446720737576382e-13, 1.9204973316755004e-15, 2.3876558966316104e-18, 3.3837868808450973e-22,),
    ),
    24: (
        (0.010935918516359486, 0.05729309683110847, 0.13940579062656833, 0.2552698520809556, 0.4023202854451399, 0.5777231133031234, 0.7786239234781336, 1.0023365076534947, 1.2464668959820606, 1.5089824408768178, 1.7882418531460338, 2.083002450516688, 2.3924185785023218, 2.7160426078205395, 3.0538385393116614, 3.406219042787621, 3.7741210181541587, 4.1591453200556945, 4.563810262689709, 4.992025570003139, 5.450044712989222, 5.948626494364024, 6.5090385498776655, 7.187540938907103,),
        (0.028023895959063176, 0.06429463455252858, 0.09746680007801124, 0.12359434919234225, 0.13754222183095796, 0.13509302496388506, 0.11602241430645138, 0.08578887241292055, 0.05363465288876744, 0.027814635607973173, 0.011731928111715285, 0.003943929764879919, 0.001034429163503385, 0.00020685539765393236, 3.0732148772516973e-05, 3.2915312588558644e-06, 2.4504904884193304e-07, 1.2112148229049733e-08, 3.74171410206439e-10, 6.644659907170289e-12, 5.993965136010448e-14, 2.2476274481884044e-16, 2.405240577458046e-19, 2.8750941664912045e-23,),
    ),
    25: (
        (0.010300087285163231, 0.053985341518803, 0.13145451466029545, 0.2409478755263221, 0.3801908276642194, 0.5466404157478711, 0.7376999484235796, 0.9508877623783746, 1.183953532185159, 1.4349475698291867, 1.7022546954938125, 1.9846055256613493, 2.2810767024455525, 2.5910895759857127, 2.914415349046184, 3.2511944348558224, 3.6019794600645807, 3.96781619941542, 4.35038760591686, 4.752270151603065, 5.177408503936032, 5.63206494163123, 6.126969857662948, 6.683289401208942, 7.35695492480725,),
        (0.0263976290652849, 0.06063694727148425, 0.09221874905904336, 0.11773959347869074, 0.13265187184088206, 0.1328989563100997, 0.11752399360623615, 0.0904798627608173, 0.05965301699759167, 0.03309103340777237, 0.015167308104065589, 0.005638517483200587, 0.001667696531482371, 0.0003844810361138459, 6.756032114148952e-05, 8.820870984601254e-06, 8.305083592094977e-07, 5.437079750072189e-08, 2.3635062256294632e-09, 6.419489246854768e-11, 1.0012625782071099e-12, 7.91505085648632e-15, 2.5895258786104746e-17, 2.3969524295180548e-20, 2.4292790129829983e-24,),
    ),
    26: (
        (0.009723530168629441, 0.05098310769401674, 0.12422617133274523, 0.22790105605126665, 0.3599840169287394, 0.5181883387942526, 0.7001498302843068, 0.9035773258386787, 1.1263607430001228, 1.366639197908994, 1.6228374279050304, 1.8936805722368477, 2.1781967896706327, 2.4757157171543622, 2.785869397729397, 3.108601630563089, 3.444192164472432, 3.793304368025086, 4.157070197531506, 4.537237319960044, 4.936427282139345, 5.358610150860652, 5.810050544705912, 6.301447066929721, 6.853865270467234, 7.52291936138032,),
        (0.024922576553712324, 0.05730981122686627, 0.08740497921350913, 0.11226001792373422, 0.12784789697166385, 0.13033010834106282, 0.11825138696351058, 0.09433899318641606, 0.06518727808191785, 0.03838412203203928, 0.018939328881505093, 0.0076978004587486765, 0.0025323307449372366, 0.0006619526653305483, 0.0001347976346163568, 2.091918915139468e-05, 2.412604169993089e-06, 2.007097545551679e-07, 1.1613083407164256e-08, 4.46173926279563e-10, 1.0706045031884117e-11, 1.4735090702046812e-13, 1.0254295817560677e-15, 2.940245617585894e-18, 2.364813798005163e-21, 2.0419264744972733e-25,),
    ),
    27: (
        (0.009198793989262797, 0.04824840593403584, 0.11763254610265493, 0.21597755724611958, 0.34147714624910663, 0.4920705543781125, 0.6656030847247207, 0.8599600293194292, 1.0731663489191297, 1.3034525980721758, 1.5492927995112993, 1.8094220454682177, 2.082841578782381, 2.3688181049232737, 2.666882934308175, 2.9768357650188406, 3.2987578187599835, 3.633039969329544, 3.9804340296518483, 4.342140736022596, 4.719959070432023, 5.116545530206283, 5.53588819569456, 5.984249084490303, 6.47229262782769, 7.0209851275622635, 7.685634675681339,),
        (0.023579786038793592, 0.05427332490415942, 0.08297963239339132, 0.1071344090269635, 0.12316950519323346, 0.12749390660219323, 0.11832958398300447, 0.09742238743710312, 0.07018182864679742, 0.04357682383198007, 0.02296029497057065, 0.010104045100718514, 0.003654062734526248, 0.0010679245967863725, 0.0002477901435172232, 4.477400684375968e-05, 6.165649042173664e-06, 6.311049445638935e-07, 4.66101598751942e-08, 2.3945874162292163e-09, 8.168111901838019e-11, 1.7391878344246194e-12, 2.1213709883911434e-14, 1.3051094539374538e-16, 3.293400804584062e-19, 2.311318162262868e-22, 1.707988112300017e-26,),
    ),
    28: (
        (0.008719588029005548, 0.04574909614166879, 0.11159871932322268, 0.20504781400167743, 0.32447923760158837, 0.468031827732541, 0.6337395469897196, 0.8196504998319216, 1.0239183860495078, 1.2448655491874108, 1.481021400767459, 1.7311421623847776, 1.9942182235011294, 2.269474800895513, 2.5563706798322428, 2.8545990569928446, 3.1640941615711684, 3.4850476171708253, 3.8179397177202454, 4.163593502901698, 4.523264989446328, 4.898794031907143, 5.292864163528461, 5.709475714442272, 6.154884311278227, 6.639718575833905, 7.184847211770425, 7.845282694540642,),
        (0.02235324972221304, 0.05149349953021148, 0.07890238919515358, 0.10234038225032115, 0.11864253734617786, 0.12447618582381795, 0.11787061421424212, 0.09979755415418426, 0.07461014999569016, 0.048572734621053076, 0.027139181070254648, 0.012822972003294984, 0.005047183552364584, 0.0016296443050171517, 0.0004247533281167195, 8.784380155985846e-05, 1.4145187319541691e-05, 1.7360233753296017e-06, 1.5840454418004107e-07, 1.0431164061184252e-08, 4.778707192942841e-10, 1.453284614775631e-11, 2.75705707927272e-13, 2.9921983434066586e-15, 1.6337756201058984e-17, 3.6424098054191484e-20, 2.2392734851615476e-23, 1.4221390441065483e-27,),
    ),
    29: (
        (0.008280569972803698, 0.0434578258132133, 0.10606070921315724, 0.19500069653866967, 0.3088257333951099, 0.44585130015389135, 0.6042812437967302, 0.7823134683470807, 0.9782234940873369, 1.190424195436267, 1.4175040612859893, 1.6582484492272682, 1.911648909849651, 2.1769053526093254, 2.4534251508200713, 2.740822615729986, 3.0389218413042864, 3.347765890425563, 3.667635827682215, 3.999084489424549, 4.342992701950075, 4.700661177732776, 5.073962423048969, 5.465600763425045, 5.879584248089767, 6.322159198971771, 6.803917350834571, 7.345631664267517, 8.002028968329803,),
        (0.02122936458284723, 0.04894123624610368, 0.07513778366043214, 0.09785544595540395, 0.11428296626128379, 0.12134490387394313, 0.11697289240933804, 0.10153700447129889, 0.0784686100577914, 0.05329696621240349, 0.031387826293134184, 0.015807798144660018, 0.006713638931900188, 0.0023704740648623924, 0.0006856636978474935, 0.00015997208672839026, 2.9604051525126362e-05, 4.265381179967604e-06, 4.6845966984045014e-07, 3.825983777174952e-08, 2.2555009965479807e-09, 9.250490250634968e-11, 2.517866106463548e-12, 4.2720528170526635e-14, 4.1405464087538045e-16, 2.013748547285642e-18, 3.980736262861465e-21, 2.1516579416548026e-24, 1.1790434258181818e-28,),
    ),
    30: (
        (0.007877176903159587, 0.041351188284930195, 0.10096359097672786, 0.1857404265714139, 0.2943742008554981, 0.4253370324747781, 0.5769857919877108, 0.747655936784685, 0.9357376189830159, 1.1397318724667636, 1.3582881628249979, 1.5902266024697016, 1.834548887148129, 2.09044193828549, 2.357277764667262, 2.634612504010196, 2.9221871737576146, 3.219932480483172, 3.527980217717466, 3.846684475218563, 4.176657375266121, 4.518826933011001, 4.874530175856972, 5.245665730342264, 5.634953748627197, 6.046406415698608, 6.486258508241381, 6.9650642192596015, 7.503502747623265, 8.15602473500707,),
        (0.020196505607634013, 0.04659150298607661, 0.07165458585357944, 0.09365766983092923, 0.11009953733265747, 0.11815338991652555, 0.11572156820166703, 0.10271376134524712, 0.08177069679014698, 0.05769515479657779, 0.03562540296643199, 0.01900365738672783, 0.008643449595464758, 0.0033078878239354535, 0.001050821897951837, 0.00027319563954316496, 5.725831400943585e-05, 9.51672377121102e-06, 1.2315362737543165e-06, 1.215017504030263e-07, 8.91572490571217e-09, 4.722950993646973e-10, 1.7404868192587378e-11, 4.255228088282644e-13, 6.479730898790391e-15, 5.627866992931239e-17, 2.446262009461491e-19, 4.302115837648145e-22, 2.0514929351320854e-25, 9.735433606432027e-30,),
    ),
    31: (
        (0.007505490753616369, 0.03940905010160963, 0.09625998489051235, 0.17718408128767651, 0.28100083318802804, 0.40632154208584587, 0.5516409952016137, 0.7154207883363534, 0.8961584858955792, 1.092440161757749, 1.3029768346950088, 1.5266271785449295, 1.7624097169787847, 2.009507810979929, 2.267270445639736, 2.5352113858819507, 2.8130088764589964, 3.100507822096787, 3.397726379548461, 3.704869213895819, 4.022350465542091, 4.35083103184023, 4.691277681834889, 5.04505706218808, 5.414088687051689, 5.801104557264042, 6.210118145051791, 6.647350962688402, 7.123319327246903, 7.658610728538594, 8.30740859014685,),
        (0.019244685633642636, 0.04442266812373986, 0.06842525522462203, 0.08972608688778473, 0.10609575308968379, 0.1149431078478655, 0.11418944427649524, 0.1033983651251439, 0.08454201386111204, 0.06173135460425189, 0.03978123350200461, 0.022351815672288403, 0.010816152888440367, 0.004452158408245201, 0.0015393053618078518, 0.00044124365341091697, 0.00010343887910934113, 1.954123084455567e-05, 2.927264657531847e-06, 3.4144121603564345e-07, 3.0367956500046586e-08, 2.0092028493359495e-09, 9.597226287214868e-11, 3.188731943170195e-12, 7.025900164213916e-14, 9.633463159472386e-16, 7.521832579835828e-18, 2.93132249500469e-20, 4.6007585122099043e-23, 1.9417362500950684e-26, 8.007856539508373e-31,),
    ),
    32: (
        (0.0071621303644661205, 0.03761400955200059, 0.09190883262148791, 0.16925956020914928, 0.2685975822568592, 0.3886581295480949, 0.5280603900453781, 0.6853815321410675, 0.8592194454123147, 1.0482416457678492, 1.251220309965909, 1.467055098488073, 1.694786278746173, 1.9336008777265692, 2.182834428113815, 2.441970542013188, 2.7106402062583332, 2.9886224421932472, 3.2758478763825756, 3.5724068855638555, 3.878564391798385, 4.1947842417148005, 4.521767699989084, 4.860513517668797, 5.212412567029794, 5.579401025896107, 5.964219536511808, 6.370880584784803, 6.805591106085746, 7.2788294508328635, 7.811093484044251, 8.456307914945329,),
        (0.018365282155480448, 0.042415957917110815, 0.06542546192970845, 0.08604091714033023, 0.102271359704038, 0.11174596374692708, 0.11243817400149696, 0.10365701192549456, 0.08681615099928837, 0.06538537726512686, 0.04379620044400919, 0.02579330775247064, 0.013202895001896461, 0.005805800947906538, 0.002167524500938052, 0.0006787839260392172, 0.00017608013052630825, 3.733504079120096e-05, 6.378042998594621e-06, 8.639554329233503e-07, 9.11349373301876e-08, 7.331472971354451e-09, 4.387948215368129e-10, 1.8960694494934273e-11, 5.69796942991955e-13, 1.1349734373178115e-14, 1.405511255475301e-16, 9.89527296524248e-19, 3.467612200148655e-21, 4.871518830726665e-24, 1.8251964514225297e-27, 6.562995432787464e-32,),
    ),
    33: (
        (0.006844164253429336, 0.03595095777175839, 0.08787440042378147, 0.16190391914371738, 0.25706979531479307, 0.372217837491742, 0.5060795515307503, 0.6573379490768338, 0.8246843986011254, 1.0068639801985209, 1.2027089279403191, 1.4111612596654481, 1.6312865344312781, 1.8622809733808623, 2.1034741212806907, 2.354328989807006, 2.614441342571521, 2.883539544192825, 3.161486258242442, 3.448283284794282, 3.7440810271777467, 4.049194550355112, 4.364129091405517, 4.6896195012196795, 5.026691032408074, 5.376754405045235, 5.741759027455307, 6.124451582689811, 6.528841750239379, 6.96112089527765, 7.431729495740637, 7.961077879087539, 8.602840103678357,),
        (0.017550816349071276, 0.04055501229583308, 0.06263367054491728, 0.08258367312601007, 0.09862345692292632, 0.10858620746246431, 0.11051955442026229, 0.10355051829241109, 0.0886314120938611, 0.06864997575889667, 0.047623062822144985, 0.029271811249934665, 0.015768818323346857, 0.007363716338566443, 0.0029480514026843717, 0.0010005138977970348, 0.0002845247109354188, 6.69791132554454e-05, 1.2883421613936902e-05, 1.9963319610596706e-06, 2.452906534099762e-07, 2.3473113399476538e-08, 1.7133014366340905e-09, 9.304660553186062e-11, 3.648185334087583e-12, 9.94544171768631e-14, 1.7961096015524853e-15, 2.014588547284859e-17, 1.2824724054849402e-19, 4.052441068702941e-22, 5.110029072028829e-25, 1.7044682567416109e-28, 5.3603688342758444e-33,),
    ),
    34: (
        (0.0065490396477624335, 0.03440672066991826, 0.08412546220256352, 0.1550619972112585, 0.2463342566769014, 0.35688691936240546, 0.4855530105355541, 0.63111246025957, 0.7923435792168592, 0.9680649995761742, 1.1571674092655717, 1.3586357503712134, 1.571563356448174, 1.7951598463196574, 2.028754614182699, 2.27179759879128, 2.523858790807329, 2.7846277253424123, 3.0539140569040377, 3.3316502613703336, 3.6178975871349186, 3.9128566316117195, 4.216884431299648, 4.530520876593616, 4.854528893221556, 5.189955767076451, 5.538228487948527, 5.901306886805814, 6.28194156836356, 6.684137945823843, 7.114071072765735, 7.582143788949022, 8.108680953942283, 8.747113623949822,),
        (0.016794773135787706, 0.03882551922070187, 0.06003077956291964, 0.07933718829345952, 0.09514732406872133, 0.10548198503974196, 0.10847680295205009, 0.10313386755270718, 0.09002831525936301, 0.0715281325327989, 0.051225992164579494, 0.03273571840001191, 0.01847545217043899, 0.009113899109827015, 0.0038888241935776144, 0.0014202116312368224, 0.0004391550265010448, 0.0001136949969357114, 2.435433617700066e-05, 4.261681835867094e-06, 6.00719924459507e-07, 6.714872724873909e-08, 5.846526622743371e-09, 3.8831414306003413e-10, 1.9190924030466077e-11, 6.846751356718407e-13, 1.6979250745669732e-14, 2.7877398592744337e-16, 2.8396866111060935e-18, 1.6388610024736375e-20, 4.6817506203786063e-23, 5.312792901389987e-26, 1.5818875768790807e-29, 4.363844992141414e-34,),
    ),
    35: (
        (0.006274524378747132, 0.03296976500701036, 0.08063462613995483, 0.14868527932578957, 0.2363175567084356, 0.34256472191786796, 0.46635166818367996, 0.6065470801453909, 0.762010023860146, 0.9316286430278055, 1.1143501278537447, 1.3092023015772047, 1.5153079230309978, 1.7318931702306668, 1.9582918514034429, 2.1939467977196303, 2.4384097207679942, 2.6913406362688406, 2.9525078092534005, 3.2217890951345542, 3.4991755599357957, 3.784778389996698, 4.078840392491352, 4.381753925504282, 4.6940880345317995, 5.016629208526291, 5.350443098526931, 5.696970020879709, 6.058177919808868, 6.436819587495266, 6.836894999029514, 7.264562354705139, 7.730187196121555, 8.254010952485459, 8.88922893671777,),
        (0.016091453744207885, 0.03721491217331084, 0.05759980993890361, 0.07628559619405606, 0.09183703234976483, 0.10244659741163474, 0.10634575466852923, 0.1024561502852048, 0.09104774984680851, 0.07403060272922955, 0.054579604145330717, 0.03613946170455165, 0.02128289828943856, 0.011038537720814085, 0.0049927623476667, 0.0019498558247452655, 0.0006508895012944404, 0.00018379532484669663, 4.3426521458199965e-05, 8.486649217597223e-06, 1.3546403548942343e-06, 1.7417940739249655e-07, 1.7761545909780014e-08, 1.4109437898324225e-09, 8.550768892307454e-11, 3.855988313718187e-12, 1.255130753294174e-13, 2.838837774664925e-15, 4.248236629363988e-17, 3.9398653755295574e-19, 2.0665101663256997e-21, 5.350169547202848e-24, 5.477239370287976e-27, 1.4595042134898881e-30, 3.5415669158196707e-35,),
    ),
    36: (
        (0.006018659022618089, 0.031629955740052076, 0.07737777663839315, 0.14273094897233296, 0.226954726899395, 0.32916190548009727, 0.44836061635023206, 0.5835008461808736, 0.7335165993313573, 0.8973615379713341, 1.0740371728903175, 1.2626137062068832, 1.4622443219641927, 1.6721740939294298, 1.8917448029228687, 2.1203969157536897, 2.357669852683069, 2.6032015200729264, 2.8567279505584837, 3.1180838016854158, 3.3872044349440005, 3.6641303496612783, 3.949014907309359, 4.24213659750429, 4.543917650694892, 4.854951749464857, 5.176045228038917, 5.508279072137399, 5.853104489546176, 6.21249562868355, 6.589206044907089, 6.9872293350816745, 7.412706463462389, 7.875966092607315, 8.39716821658186, 9.029279298089584,),
        (0.015435854185924422, 0.03571211864503194, 0.055325636306520966, 0.0734142794304272, 0.08868589655969292, 0.09948951573308804, 0.10415594857139987, 0.1015607596047726, 0.09172967018369418, 0.07617378507627635, 0.057667708595989256, 0.03944420315414815, 0.024151684599484455, 0.013115333657788024, 0.0062577713107177186, 0.002598901032706236, 0.0009305995673414189, 0.0002845235355896054, 7.353243860876815e-05, 1.5894059985720398e-05, 2.8408418902206784e-06, 4.146979273947737e-07, 4.8765828632557647e-08, 4.548317914589825e-09, 3.305040619675304e-10, 1.832311923206166e-11, 7.558733281880791e-13, 2.25034735231977e-14, 4.653522041874112e-16, 6.362501688041579e-18, 5.384946128323806e-20, 2.572971398232043e-22, 6.051118430848639e-25, 5.60173912132681e-28, 1.3390697812852562e-31, 2.8657429182949894e-36,),
    ),
    37: (
        (0.005779717258831996, 0.03037835460173315, 0.07433360945407849, 0.13716109564775958, 0.21818809242238674, 0.31659894142459394, 0.4314772920924975, 0.5618476396354484, 0.7067134849893244, 0.8650901165916517, 1.036031043861482, 1.2186480041620302, 1.4121250980682927, 1.6157279756117189, 1.8288091467683227, 2.0508104896963166, 2.2812639443591176, 2.5197912586774316, 2.7661035359642456, 3.020001240595555, 3.2813752703847223, 3.5502097130396226, 3.826586987380662, 4.110696254416054, 4.402846315524274, 4.703484779033781, 5.013226228090579, 5.332893759156214, 5.66358117421752, 6.006748546886802, 6.364374644453517, 6.739212612252699, 7.135248916205575, 7.558607028654064, 8.019579210684832, 8.538245967229885, 9.16735146091847,),
        (0.014823564532435418, 0.03430735004239533, 0.053194755060047005, 0.07070980114849039, 0.08568680618841375, 0.09661719724928478, 0.1019315911324613, 0.10048574062678131, 0.09211221383902447, 0.07797794030460015, 0.06048194525934271, 0.04261801790947256, 0.027044230104150684, 0.015318887105600075, 0.0076770752929266805, 0.0033737626803815577, 0.001288509870901991, 0.00042379343395506, 0.00011891516842038556, 2.818911559492689e-05, 5.586956170546678e-06, 9.15496740540386e-07, 1.2251756444245387e-07, 1.3208774249839636e-08, 1.1295852358120428e-09, 7.526716394968196e-11, 3.826547493291965e-12, 1.4474791501324288e-13, 3.950747577283346e-15, 7.486747006765292e-17, 9.373480070900001e-19, 7.256099918485743e-21, 3.1652723768256534e-23, 6.776958597578837e-26, 5.685586243615646e-29, 1.2220382359243024e-32, 2.3123525390084873e-37,),
    ),
    38: (
        (0.005556172860119695, 0.029207052046496727, 0.071483242570576, 0.1319420486799378, 0.20996630335766098, 0.30480483840412287, 0.41560990816892696, 0.5414743295830671, 0.6814660294308976, 0.8346581675019148, 1.0001538577410867, 1.1771052800388149, 1.3647275466425084, 1.5623080412158834, 1.7692121158067378, 1.9848860619774324, 2.20885821920216, 2.440738990221113, 2.6802204319513896, 2.9270760040794146, 3.1811610005517057, 3.4424141731107425, 3.7108610923059464, 3.9866198962693726, 4.269910277899929, 4.561066904121427, 4.860559031249718, 5.16901903408529, 5.487284199911725, 5.816459042671641, 6.158010808525094, 6.513921561804917, 6.886943069254004, 7.281054065428816, 7.702360376395417, 8.161118381704465, 8.6773309894674, 9.303526291073904,),
        (0.01425068499329684, 0.03299192539722706, 0.05119508415104113, 0.06815982762302884, 0.08283246609164482, 0.09383373891584877, 0.09969239730265832, 0.09926422333960125, 0.09223114642094637, 0.07946574421252389, 0.06302042274236526, 0.04563570293544523, 0.029925916022461224, 0.017622030241385617, 0.009239795891164077, 0.00427753379143347, 0.0017336401865000871, 0.0006098524682497375, 0.00018457496683966837, 4.762655427267287e-05, 1.037768905675986e-05, 1.8901561104266238e-06, 2.846039432498808e-07, 3.499829237832262e-08, 3.4674064272456603e-09, 2.7251721981409336e-10, 1.668955740159815e-11, 7.798610636372171e-13, 2.7111608737273256e-14, 6.799072970798129e-16, 1.183285789807953e-17, 1.35952606923677e-19, 9.646146945048779e-22, 3.849650149363823e-24, 7.519178201082161e-27, 5.7289503857692515e-30, 1.1095763869975986e-33, 1.8608057495798978e-38,),
    ),
    39: (
        (0.005346672066691652, 0.028109026352894348, 0.06880988896489566, 0.12704381483831056, 0.20224351340848656, 0.2937160582013122, 0.4006761130000176, 0.5222791853820032, 0.657652917193521, 0.8059247456562136, 0.9662449742582071, 1.1378049559570564, 1.319850602986211, 1.5116917724107737, 1.7127082520720998, 1.922353125185788, 2.1401542653866894, 2.36571464447426, 2.5987120511585267, 2.8388987409679767, 3.086101478784847, 3.3402224058522716, 3.601241171029719, 3.86921882195842, 4.144304071722216, 4.426742767800253, 4.7168917402304755, 5.01523877994314, 5.322431452017661, 5.639319078238133, 5.967015117320655, 6.306992566128971, 6.661235679961274, 7.032494046068914, 7.4247381915341935, 7.844056223114263, 8.300669188564152, 8.814504235107472, 9.437879310720769,),
        (0.01371375564497317, 0.031758122803520354, 0.04931579009806392, 0.06575304757745538, 0.0801155694167587, 0.09114139976548691, 0.09745431594590953, 0.09792489051405068, 0.09211955106489522, 0.08066114422826644, 0.06528643690986341, 0.04847832797223563, 0.032765792969466544, 0.01999702561281923, 0.010931688736232924, 0.005309927054826395, 0.0022733359213764205, 0.0008509009531493263, 0.00027614790666693204, 7.704721198469707e-05, 1.8317875288090784e-05, 3.6764512765281222e-06, 6.16674873827795e-07, 8.550839290034985e-08, 9.683606269516515e-09, 8.835870888122316e-10, 6.396291128648386e-11, 3.6082115365660554e-12, 1.5530022174621545e-13, 4.97239696776857e-15, 1.1481413693361178e-16, 1.8388820638687957e-18, 1.942764663611444e-20, 1.2659503153391373e-22, 4.63128610580627e-25, 8.268607186658061e-28, 5.732804475596849e-31, 1.0025819103547724e-34, 1.4935833831583368e-39,),
    ),
    40: (
        (0.005150010356392187, 0.027078024948292357, 0.06629858021142791, 0.1224396015988327, 0.19497868093068677, 0.2832755895057382, 0.3866018422176643, 0.5041705134328482, 0.6351645938060011, 0.7787623792828706, 0.9341589652282665, 1.1005834881386765, 1.2773122130155068, 1.46367787695712, 1.6590758770025502, 1.8629679598650293, 2.074884066030344, 2.294422931706632, 2.521251984268589, 2.755106998376951, 2.995791923381209, 3.2431792565197055, 3.4972113275714545, 3.757902886114078, 4.025345452403971, 4.299714023322115, 4.5812769433993346, 4.870410105599752, 5.167617222469372, 5.473558861103993, 5.789094560417866, 6.115345232898956, 6.453788427291659, 6.8064096614249525, 7.175955680231679, 7.566388429073046, 7.983778287554151, 8.438311541355182, 8.949841355010722, 9.570481178890414,),
        (0.013209697312601352, 0.03059905370261563, 0.04754713831646478, 0.06347909188363215, 0.07752891987334061, 0.08854101751147347, 0.09523015006610107, 0.09649244869112555, 0.09180769647145014, 0.08158847993666934, 0.06728731309790235, 0.051132627065258895, 0.035536973906718373, 0.02241658082121184, 0.012735956375353994, 0.006467414922882221, 0.002912918410285912, 0.0011547022629092823, 0.000399724486069836, 0.00011987542131233428, 3.0887939434094234e-05, 6.779165463939851e-06, 1.2557304441221735e-06, 1.9437639549067642e-07, 2.4871931294649487e-08, 2.599389521286697e-09, 2.1890173288393071e-10, 1.462594895059478e-11, 7.615497202267489e-13, 3.025324973314528e-14, 8.93910791245512e-16, 1.9042222157219325e-17, 2.812156501685196e-19, 2.7371976597870872e-21, 1.641171797178257e-23, 5.514053461752706e-26, 9.015651883015744e-29, 5.698833748918482e-32, 9.017066019811114e-36, 1.195878662984299e-40,),
    ),
    41: (
        (0.0049651128231892735, 0.02610846401266908, 0.06393593204876337, 0.11810541142187898, 0.18813497184189074, 0.2734321537775056, 0.37332033090895456, 0.48706548219787865, 0.6139019073356123, 0.7530555246730477, 0.9037638691402927, 1.0652923954798872, 1.2369470957467243, 1.418083728573562, 1.6081141325733013, 1.806510176479802, 2.0128059101145297, 2.22659844862055, 2.4475480691918583, 2.6753779410604697, 2.9098738572584404, 3.1508842984903733, 3.398321141073234, 3.6521613275828035, 3.9124498571196824, 4.179304531910372, 4.452923034692363, 4.73359313484678, 5.021707178704029, 5.317782596065186, 5.622491106123585, 5.93670092601244, 6.261539158572332, 6.598486889874224, 6.949530118872312, 7.317412199576055, 7.706086205130218, 8.12160483236812, 8.574120186906548, 9.08341317068369, 9.701398117959075,),
        (0.012735761612194295, 0.029508556081577937, 0.04588036342410622, 0.0613284559242121, 0.07506551621570161, 0.08603234016818581, 0.09303008352781318, 0.09498808206176709, 0.09132303141841037, 0.08227182602117748, 0.06903339325124945, 0.053590308149005374, 0.03821677102563799, 0.024854658697599515, 0.014634068619599263, 0.007743527665227667, 0.003655469729077536, 0.0015282168108870313, 0.0005616228419896725, 0.00018007306096011304, 4.9984183938368925e-05, 1.1915094362705487e-05, 2.4185631552102813e-06, 4.1426366378908944e-07, 5.9291920885226556e-08, 7.015161907534993e-09, 6.779531107772685e-10, 5.279686968341156e-11, 3.2624082387123865e-12, 1.5709894667193027e-13, 5.771382631161906e-15, 1.5767290699978705e-16, 3.1044737404483636e-18, 4.235201146728838e-20, 3.8047867824010155e-22, 2.1028558658504545e-24, 6.500287809575591e-27, 9.75053959298681e-30, 5.6293318039290384e-33, 8.073828997483562e-37, 9.552533294256826e-42,),
    ),
    42: (
        (0.004791017532544069, 0.025195343191982987, 0.061709944745840295, 0.11401969516374519, 0.1816792477441739, 0.2641395220370395, 0.3607712612064874, 0.4708891059680606, 0.5937749322951543, 0.7286992290259421, 0.874939683852531, 1.031796563204026, 1.1986048276688255, 1.3747431888075268, 1.559640482239359, 1.7527798185003913, 1.9537009973426147, 2.1620016538697198, 2.3773375646485424, 2.5994224931731624, 2.828027907267331, 3.0629828634265084, 3.304174329822892, 3.5515482148998405, 3.805111386688351, 4.064935015504802, 4.331159659550118, 4.604002655725853, 4.883768604767753, 5.17086409886034, 5.465818416394526, 5.76931285747441, 6.0822230086155304, 6.405681088164437, 6.741170858013797, 7.090678139118139, 7.456942440849384, 7.843907742703954, 8.257609144886585, 8.708165161236275, 9.215286093428073, 9.83069229328547,),
        (0.012289488554596032, 0.02848110339528439, 0.04430755666281486, 0.05929242597301126, 0.07271860862800274, 0.08361428952387362, 0.09086212605661097, 0.09342987732396235, 0.0906902656429994, 0.08273451786101338, 0.07053717301250674, 0.055847338595482965, 0.040786635181751046, 0.02728708321980616, 0.01660653775172539, 0.009129263993581695, 0.0045017519725586794, 0.0019772867219263256, 0.0007681354094238455, 0.0002620509697101226, 7.793733156869589e-05, 2.0055996679978282e-05, 4.430576910002215e-06, 8.332416495963202e-07, 1.322180329062464e-07, 1.7530590599819607e-08, 1.921489324720917e-09, 1.7203816930959595e-10, 1.2413262251631423e-11, 7.107009280244044e-13, 3.1709483758702674e-14, 1.0792558192304306e-15, 2.7311194538118292e-17, 4.979102106722785e-19, 6.2858146221102666e-21, 5.2210434949581743e-23, 2.6644611742406367e-25, 7.590590598845542e-28, 1.0463563681652572e-30, 5.527089131963612e-34, 7.198520095985664e-38, 7.613169421570274e-43,),
    ),
    43: (
        (0.004626861344555632, 0.024334172859668934, 0.05960983245550533, 0.11016305493671334, 0.17558162560421336, 0.2553559251715426, 0.3489000243249898, 0.4555733630575226, 0.5747019478858029, 0.7055979688931419, 0.8475770592795817, 0.9999727760404584, 1.1621481935829063, 1.333504742363013, 1.5134885856305058, 1.7015949170668876, 1.8973705956426508, 2.1004155284490817, 2.310383183251334, 2.526980572805765, 2.7499680120912617, 2.9791589142120984, 3.214419865493934, 3.455671208741423, 3.702888369103408, 3.956104183694203, 4.215412550334497, 4.480973802638058, 4.753022364948983, 5.0318774695248925, 5.317958078203335, 5.611803726624168, 5.914103955513193, 6.225740603056801, 6.547850085323049, 6.8819181062654895, 7.229929751871572, 7.5946203122977645, 7.979924509052904, 8.391859965148988, 8.840512192507651, 9.345522497982163, 9.958422152138795,),
        (0.011868670421332052, 0.02751172661506506, 0.0428215679957475, 0.0573630103238327, 0.0704817343110055, 0.08128517004484712, 0.08873248768564194, 0.09183321328770735, 0.08993150682378871, 0.08299882385278838, 0.07181258337676971, 0.05790324760040824, 0.04323195194762371, 0.029691955773249838, 0.0186336124258989, 0.010613569467705891, 0.005450249337437855, 0.0025063900865432646, 0.0010252692779649675, 0.00037054303154503094, 0.00011750474029429827, 3.2464745570603044e-05, 7.757369187041956e-06, 1.5907683965377755e-06, 2.7766439035033643e-07, 4.088932845615172e-08, 5.031338627836192e-09, 5.118109810669533e-10, 4.25311084872329e-11, 2.8484067432158274e-12, 1.5137307253861152e-13, 6.268797106451027e-15, 1.980175845149728e-16, 4.649473490625026e-18, 7.861890350572787e-20, 9.199935793008172e-22, 7.076742428409647e-24, 3.340138994169809e-26, 8.783674223212245e-29, 1.1145320233386473e-31, 5.395279094828719e-35, 6.391922858160777e-39, 6.054342281149816e-44,),
    ),
    44: (
        (0.004471867792228661, 0.023520911845530023, 0.05762587681703529, 0.10651798848516823, 0.16981509775244114, 0.247043543371803, 0.3376570797316713, 0.44105642828132996, 0.5566085474320562, 0.6836646375698558, 0.8215761590167726, 0.9697084441567099, 1.1274517596133753, 1.2942298916590724, 1.4695064796336432, 1.6527894124141904, 1.8436336431501872, 2.0416427812643354, 2.2464698013103543, 2.457817176803282, 2.675436712159076, 2.8991293135693703, 3.1287449143020205, 3.364182754677935, 3.6053922144804984, 3.852374408741238, 4.105184790791957, 4.363937065516154, 4.628808811128469, 4.900049356458293, 5.177990690896309, 5.463062544216551, 5.755813348294009, 6.056939736464412, 6.367328840453633, 6.688120487724362, 7.020801697644878, 7.3673563499730745, 7.730515207302857, 8.1142036161082, 8.524421868055631, 8.971223060925618, 9.474181056537704, 10.08464272712273,),
        (0.011471320866170987, 0.02659594727959174, 0.0414159208024953, 0.05553287548178794, 0.06834873776743607, 0.07904283413034871, 0.08664589283749774, 0.09021111280697126, 0.08906643125787123, 0.08308573323561934, 0.07287440534574809, 0.05976047231530772, 0.0455417411174939, 0.032049904940046954, 0.02069586894053911, 0.012183842559523948, 0.006497313506470775, 0.003118475067856647, 0.0013384993887128156, 0.0005104518678669453, 0.0001718343241405329, 5.072007889486379e-05, 1.3036721462144247e-05, 2.8970033988305275e-06, 5.523597429300713e-07, 8.963197938238669e-08, 1.2270490609645827e-08, 1.4036217402689473e-09, 1.3274262815682276e-10, 1.0255719803685442e-11, 6.386155910389748e-13, 3.1555042300372645e-14, 1.2149710720063824e-15, 3.5676995937255644e-17, 7.78538581286368e-19, 1.2229649096029366e-20, 1.328639412308951e-22, 9.479559594771942e-25, 4.144495294923553e-27, 1.0076255794156754e-29, 1.1786928292607442e-32, 5.23734568703688e-36, 5.653468140191113e-40, 4.8046263321437927e-45,),
    ),
    45: (
        (0.004325336678691128, 0.022751913933456405, 0.05574930092625009, 0.10306866855193003, 0.16435520291318498, 0.23916806276191505, 0.326997397047398, 0.4272820029512606, 0.5394268597904316, 0.6628196594090217, 0.7968456654203896, 0.9409004919257474, 1.0944006326865103, 1.2567917673318987, 1.427555012618599, 1.606211375699521, 1.7923247109434997, 1.9855034929606998, 2.1854017071455236, 2.3917191348935534, 2.6042012813395443, 2.8226391646637263, 3.0468691617294805, 3.2767730878894135, 3.512278681456614, 3.753360667765093, 4.000042596688299, 4.252399685011555, 4.5105629575755115, 4.774725078986271, 5.045148417914699, 5.322176116911512, 5.6062473005394695, 5.897918128160248, 6.197891338621083, 6.507058532939946, 6.826562274181903, 7.157890360689214, 7.503025066911467, 7.864692375141098, 8.246808179003901, 8.65535560547327, 9.100355921045955, 9.60131703813882, 10.209405908532878,),
        (0.011095648389583662, 0.025729719802966462, 0.04008473740279866, 0.05379528745887041, 0.06631377992393914, 0.07688481248004526, 0.08460584310816613, 0.08857455708693304, 0.08811247198915469, 0.08301483306856379, 0.07373780285900353, 0.061423763730586466, 0.047708298235499734, 0.03434419703660406, 0.022774690845523526, 0.013826435255515059, 0.007637388636127895, 0.003814876106749705, 0.001712550691990486, 0.0006866773523178218, 0.0002444010203339248, 7.672611717376698e-05, 2.1108135786668363e-05, 5.054702832104956e-06, 1.0461941805730638e-06, 1.8575810237377892e-07, 2.8068239126792243e-08, 3.5779357512871923e-09, 3.8110967966781395e-10, 3.356297376823608e-11, 2.414840159616618e-12, 1.400388259071692e-13, 6.444095841131324e-15, 2.3105425973658746e-16, 6.317176959670028e-18, 1.2831605040969458e-19, 1.8753838347822143e-21, 1.89441188774611e-23, 1.2555559382991743e-25, 5.092307163363559e-28, 1.1463004766084982e-30, 1.2380226929343747e-33, 5.056896698033489e-37, 4.981494188601078e-41, 3.80520316205506e-46,),
    ),
    46: (
        (0.004186635118167399, 0.022023881734854527, 0.053972160479651886, 0.09980075184347596, 0.15917974055886355, 0.23169828927736527, 0.3168799686474712, 0.4141987283740436, 0.5230948666919951, 0.6429902127525466, 0.7733019070968359, 0.9134543850090092, 1.0628893774685835, 1.2210739198326537, 1.3875064893445834, 1.561721478817179, 1.7432922610513624, 1.931833115263505, 2.1270002821272858, 2.3284923962839317, 2.536050521137048, 2.749457985591921, 2.96854019984781, 3.1931646100388424, 3.4232409414056435, 3.658721878490278, 3.8996043405262317, 4.145931533427708, 4.3977960006650365, 4.655343960334652, 4.91878131533932, 5.188381874839486, 5.4644985563609625, 5.747578697370243, 6.038185177234779, 6.337025988515244, 6.644996490111899, 6.9632413982457395, 7.293248830066367, 7.636999116653525, 7.997213254084237, 8.377797637905582, 8.784718413276485, 9.227965591169049, 9.726982577740094, 10.332760689444788,),
        (0.010740033487579985, 0.024909381600543273, 0.03882267390272054, 0.052144058042411345, 0.0643713392017063, 0.07480841659526613, 0.08261483668151633, 0.08693276394322608, 0.08708501288302199, 0.08280425262256398, 0.07441795818418319, 0.06289966017094824, 0.04972680852075592, 0.03656073535087535, 0.024852637226936255, 0.015527122990247857, 0.008863291161840139, 0.004595307822591398, 0.002151221192452188, 0.000903939988313345, 0.00033891922957811913, 0.00011270409003416548, 3.3036880531490915e-05, 8.48243820533505e-06, 1.8951214835347647e-06, 3.6587249945657553e-07, 6.058806674182966e-08, 8.537948534323835e-09, 1.0150088923714669e-09, 1.0083251418012634e-10, 8.282188343987593e-12, 5.558098067681908e-13, 3.0064130230208186e-14, 1.2903727195375469e-15, 4.3150176673066407e-17, 1.1000948938299858e-18, 2.0830366180740082e-20, 2.8367124910740435e-22, 2.6681881915296012e-24, 1.6450447259639908e-26, 6.198198648174838e-29, 1.2936547449309444e-31, 1.2917943787909312e-34, 4.857605127617376e-38, 4.3734855924237655e-42, 3.0078352287718338e-47,),
    ),
    47: (
        (0.004055189794389815, 0.021333826790061725, 0.052287249453677985, 0.09670121312193378, 0.15426852216857156, 0.2246058114759243, 0.30726738287318245, 0.40175967108633814, 0.5075558025684587, 0.6241095461822911, 0.7508680913099935, 0.8872832755234913, 1.0328210670218723, 1.18696926384479, 1.3492434923973102, 1.519191670427969, 1.696397148034955, 1.880480761133968, 2.0711020325928025, 2.267959744004856, 2.470792081830548, 2.6793765400648963, 2.893529741140706, 3.113107319908308, 3.338004004026183, 3.5681540193949006, 3.803531952820985, 4.044154217745106, 4.290081295289263, 4.541420966215144, 4.798332816197063, 5.061034397606038, 5.329809582864729, 5.6050198756950635, 5.887119805372761, 6.176678099677553, 6.4744072673582975, 6.781205809297346, 7.098220091578398, 7.426938154732078, 7.769338100159432, 8.128135771339851, 8.507228047584084, 8.912564287594513, 9.354103813821197, 9.85122691859121, 10.45475338679354,),
        (0.010403008900164318, 0.024131609840324662, 0.03762486308028912, 0.0505734957998322, 0.06251620687273056, 0.07281081903538067, 0.08067455122047461, 0.08529343246914801, 0.08599758073119311, 0.08247065759220748, 0.07492979418204215, 0.06419603045016833, 0.05159495606966511, 0.03868797455728323, 0.026913706602831596, 0.017271526483626815, 0.010166520900134347, 0.005457927322804221, 0.0026572531678226634, 0.0011666106871868775, 0.0004592367042611174, 0.00016116528442616123, 5.012970312608017e-05, 1.373747214307003e-05, 3.296202278478622e-06, 6.880186108514159e-07, 1.2407668277873704e-07, 1.9191380413969315e-08, 2.5259154282415695e-09, 2.804703356140182e-10, 2.6024707270388295e-11, 1.9967247248719077e-12, 1.251707038776767e-13, 6.3245890615796504e-15, 2.535652931121791e-16, 7.919591927939305e-18, 1.8854313770389697e-19, 3.332726701726809e-21, 4.2347969900825174e-23, 3.714056185672481e-25, 2.1330500839798852e-27, 7.476283142137648e-30, 1.448752922099116e-32, 1.3393831294329649e-35, 4.643120951474868e-39, 3.826287788791287e-43, 2.3731145182042916e-48,),
    ),
    48: (
        (0.003930480249507167, 0.020679034948128002, 0.050688018129519584, 0.09375820069978238, 0.14960315402387084, 0.2178647053029073, 0.2981254493631819, 0.3899218699107171, 0.4927576255336982, 0.6061163752434278, 0.7294736266888333, 0.8623072484934302, 1.0041064476127777, 1.1543791524069855, 1.3126578524759045, 1.4785040246342782, 1.6515113229635903, 1.831307734675816, 2.017556908651319, 2.2099588559732664, 2.408250206822387, 2.6122041899348063, 2.8216304826416803, 3.0363750636009432, 3.256320188348975, 3.481384601006996, 3.7115240950200383, 3.9467325429976614, 4.187043532364828, 4.4325327723190195, 4.683321482719496, 4.939581043617656, 5.201539285724515, 5.469488954306003, 5.7437991100975925, 6.0249305888625315, 6.3134572102000535, 6.61009535844442, 6.915746141732375, 7.231557140095337, 7.559015977165983, 7.900098282390507, 8.257514613719941, 8.635152338564264, 9.038944233935405, 9.478819490765156, 9.974096631103858, 10.57542784125518,),
        (0.010083242484415106, 0.02339338382877715, 0.036486864216703566, 0.04907836152404256, 0.06074347845251034, 0.07088911592794128, 0.07878599609188383, 0.08366295700680278, 0.08486203014706517, 0.08202928012040146, 0.07528776889304752, 0.06532168479045537, 0.05331254474956005, 0.04071677400226156, 0.0289435075171724, 0.01904547503071712, 0.011537582760786433, 0.006399452575630522, 0.0032322553623619693, 0.001478556940156723, 0.0006092166799701052, 0.00022486587372447998, 7.39399061496217e-05, 2.153637530606086e-05, 5.5241519716972825e-06, 1.2402753889698526e-06, 2.4219134766479713e-07, 4.085525526491667e-08, 5.910676561324501e-09, 7.276429573994204e-10, 7.557265246965127e-11, 6.559321756138429e-12, 4.707653211198324e-13, 2.7606655251513663e-14, 1.3048677712688964e-15, 4.89355187524591e-17, 1.4295012944003515e-18, 3.182341296804289e-20, 5.25828332951458e-22, 6.242662752029562e-24, 5.111781139653167e-26, 2.738309111055288e-28, 8.939781246523573e-31, 1.61047330315618e-33, 1.3802768231286962e-36, 4.416994618080609e-40, 3.336295487670263e-44, 1.8689624893413436e-49,),
    ),
    49: (
        (0.003812033048422327, 0.02005703623603038, 0.04916850163964946, 0.09096091022453592, 0.14516684703859792, 0.21145127493431565, 0.2894228693336699, 0.3786459364452182, 0.47865254994083944, 0.5889543488003621, 0.709053523953848, 0.8384526555548915, 0.9766632014436676, 1.1232125617165958, 1.2776497449267936, 1.4395497351133557, 1.6085167067100754, 1.7841862601321452, 1.9662268593855896, 2.154340649442336, 2.3482638199389303, 2.5477666667602215, 2.752653487175121, 2.9627624295449264, 3.177965406769526, 3.3981681747171595, 3.6233106738546703, 3.853367735141421, 4.088350261219831, 4.328307012826481, 4.573327160891407, 4.823543811227112, 5.0791387776854755, 5.340348981757627, 5.60747500891261, 5.880892582770235, 6.1610680753923175, 6.448579739332752, 6.744147276445791, 7.048673936649003, 7.363308135570969, 7.689536786801183, 8.029332843127992, 8.385401472406855, 8.761620553157432, 9.163906492355547, 9.602158895509218, 10.095635810925298, 10.694825598360005,),
        (0.00977952231800143, 0.022691952203954143, 0.03540461893929143, 0.04765382779577491, 0.05904854243655554, 0.0690403753320238, 0.07694963890119225, 0.08204661346835604, 0.08368871797760974, 0.08149397365414017, 0.07550572934678905, 0.0662860491158474, 0.05488114186134583, 0.04264021012965714, 0.030929349100351573, 0.02083530660889971, 0.01296630207854445, 0.007415323099002612, 0.003876675054617843, 0.0018430131482046587, 0.0007926155831329929, 0.00030674579518588966, 0.00010626028675251629, 3.2771422267760324e-05, 8.948460047766766e-06, 2.151021940091871e-06, 4.524713705337143e-07, 8.276637944597607e-08, 1.3077516963286862e-08, 1.772067973241278e-09, 2.0432832074477232e-10, 1.9877154209290707e-11, 1.6160126692818547e-12, 1.0864306427947868e-13, 5.968023468950894e-15, 2.642379315295188e-16, 9.281867923319469e-18, 2.539325222195374e-19, 5.293009043247039e-21, 8.185941062018163e-23, 9.091615245427262e-25, 6.959488613053924e-27, 3.4816708504840956e-29, 1.0600624595087898e-31, 1.7775250710605736e-34, 1.414082586424176e-37, 4.1826130089709843e-41, 2.8996147215785576e-45, 1.4693555006703362e-50,),
    ),
    50: (
        (0.003699416689411894, 0.019465578559300128, 0.04772325751107756, 0.0882994741423326, 0.14094424983151282, 0.20534382473297516, 0.28113094473115596, 0.3678957018671008, 0.4651966323825675, 0.5725715758397392, 0.6895478642934006, 0.8156515241290354, 0.9504152937670518, 1.093385370852205, 1.244126893940477, 1.4022282325283635, 1.5673042057959083, 1.7389983773292415, 1.916984584253676, 2.1009678588665808, 2.290684892955382, 2.4859041828723387, 2.686425979769292, 2.8920821561666727, 3.102736088691436, 3.3182826484263566, 3.5386483857011264, 3.763791996101299, 3.993705159874531, 4.228413859001339, 4.46798029678177, 4.71250557663335, 4.962133344173209, 5.217054666250213, 5.477514522993293, 5.743820441241526, 6.016354028121806, 6.295586519829837, 6.58210002638651, 6.876617079656575, 7.180042665166923, 7.493525705142409, 7.818552150395741, 8.15709210450169, 8.511845264743718, 8.88668005924413, 9.287496741416486, 9.72416586588463, 10.215886258578427, 10.81298607294536,),
        (0.009490743704699732, 0.022024804243228256, 0.034374412277947124, 0.04629544233157954, 0.05742706735241026, 0.06726167433472327, 0.07516551054276066, 0.08044872101893036, 0.08248666537802939, 0.08087728414797325, 0.0755968131214374, 0.06709889690961354, 0.05630375141019288, 0.044453364727085276, 0.03286026555294412, 0.022628104702244103, 0.014442120563852969, 0.008499889174416981, 0.004589815829476915, 0.002262480321557463, 0.00101296345857313, 0.0004098550510257799, 0.00014910339655434712, 4.8520972503506615e-05, 1.4049918795431045e-05, 3.6005744558412923e-06, 8.120548856605414e-07, 1.602362263230294e-07, 2.7491449821097336e-08, 4.073938706886044e-09, 5.177339094054266e-10, 5.598831372290712e-11, 5.108334402805283e-12, 3.8953118086079146e-13, 2.4563170831570278e-14, 1.2656133093179373e-15, 5.25582653333676e-17, 1.7314937367235177e-18, 4.441982403664312e-20, 8.680139003597275e-22, 1.2580502763550178e-23, 1.3087212865077103e-25, 9.376525535663036e-28, 4.386041549390737e-30, 1.2469057270559322e-32, 1.9484701693977966e-35, 1.4405299157886525e-38, 3.943148028744713e-42, 2.512199247720538e-46, 1.1532495344214992e-51,),
    ),
    51: (
        (0.003592237153052922, 0.01890260468316347, 0.04634731092562672, 0.08576486464258945, 0.13692130183956874, 0.19952245810968242, 0.2732233210928803, 0.3576379039879082, 0.4523494042063319, 0.5569202049055837, 0.6709013265958522, 0.7938410321166869, 0.9252923930190932, 1.0648197232780507, 1.212003869031882, 1.3664464069970388, 1.5277728489615443, 1.695634977158682, 1.8697124484306158, 2.049713807409243, 2.23537704385661, 2.4264698197811074, 2.6227894803830187, 2.8241629511290056, 3.0304466126705516, 3.24152623689711, 3.457317061901718, 3.677764081680798, 3.902842628669341, 4.13255933458946, 4.366953568790449, 4.60609947511458, 4.850108761127047, 5.0991344416025735, 5.353375808166806, 5.613084999543941, 5.878575699034225, 6.150234715777983, 6.4285375617195095, 6.714069700259978, 7.00755606629798, 7.309903025754594, 7.622259720895135, 7.946110921772623, 8.283423737765254, 8.636892335599002, 9.010375744298306, 9.409758283309346, 9.844881978922372, 10.334887642718476, 10.929946698781816,),
        (0.009215897807207985, 0.021389644703497128, 0.03339283825158198, 0.04499909479183726, 0.055874987844891554, 0.06555012718534788, 0.07343329230653335, 0.07887278198580908, 0.0812637067018326, 0.08019053116086888, 0.07557338781619971, 0.06777013217840931, 0.057584520575043936, 0.04615310223134185, 0.03472698814331204, 0.024411875038111267, 0.01595436374030017, 0.009646616755791511, 0.0053698947374443955, 0.0027386577992056884, 0.0012734534804423586, 0.0005372716162871764, 0.00020466956791026093, 7.00524042475567e-05, 2.1435275314452104e-05, 5.8336971462087675e-06, 1.404645553989061e-06, 2.97577975790035e-07, 5.514761559492019e-08, 8.885315044686184e-09, 1.236458972713067e-09, 1.475568408816202e-10, 1.4984636234408236e-11, 1.2839214448371729e-12, 9.194460238980417e-14, 5.4450613688494455e-15, 2.634828965291899e-16, 1.0275603606064772e-17, 3.1787798448949595e-19, 7.656255704992263e-21, 1.404275707644411e-22, 1.909603694729242e-24, 1.8628481482251057e-26, 1.2506446705199658e-28, 5.476265845625359e-31, 1.4553247161946193e-33, 2.1217492198543973e-36, 1.4594704811353244e-39, 3.701517518592703e-43, 2.169962769906338e-47, 9.036788695990967e-53,),
    ),
    52: (
        (0.0034901339988488967, 0.01836623203130838, 0.04503610661960211, 0.08334880822757781, 0.13308510375849308, 0.19396889971201, 0.26567575971139007, 0.3478419093805004, 0.4400735446219699, 0.5419560494926204, 0.653062766047237, 0.7729630396773034, 0.9012293543871399, 1.0374434591177162, 1.1812014609992858, 1.3321179205540197, 1.4898290265468583, 1.6539949555785391, 1.8243015359997903, 2.000461340177159, 2.182214326449759, 2.369328144883268, 2.561598211317799, 2.758847643917949, 2.9609271467404916, 3.16771491667072, 3.379116644135635, 3.59506567484117, 3.8155233999379328, 4.040479946122553, 4.26995524607845, 4.504000584586386, 4.742700738445336, 4.9861768618542746, 5.234590317437891, 5.488147723367388, 5.747107589624049, 6.011789068422558, 6.282583573230211, 6.5599703752222265, 6.844537848457124, 7.137012956003617, 7.438303132891177, 7.749557491488622, 8.07225943307198, 8.408372951542425, 8.760586640531393, 9.132750191823314, 9.530732212219268, 9.964346709971787, 10.45267764879281, 11.045743064972806,),
        (0.008954061676652622, 0.020784371703007037, 0.03245676939842609, 0.04376098673696156, 0.05438849032009615, 0.0639029063116936, 0.07175238801313487, 0.07732160264908275, 0.08002662505559112, 0.07944389401674815, 0.07544702014751224, 0.06830961695065035, 0.05872848056791207, 0.04773784621537106, 0.036521877259739606, 0.02617566762343486, 0.01749247421333985, 0.01084829686289748, 0.006214131269048702, 0.00327240730867618, 0.0015768457150370414, 0.0006920155109805847, 0.0002753040606061906, 9.881667680704754e-05, 3.1848720804985595e-05, 9.172310052352995e-06, 2.348613281462632e-06, 5.319021547109644e-07, 1.0596891391291771e-07, 1.8465558191696784e-08, 2.7972811204190407e-09, 3.659813683515763e-10, 4.106355859495134e-11, 3.9207748721655994e-12, 3.158687488497016e-13, 2.1269121907944688e-14, 1.1843697681167595e-15, 5.3888045037937504e-17, 1.9759658001816777e-18, 5.746681060999937e-20, 1.3010033338313324e-21, 2.2423303903190002e-23, 2.864199219652737e-25, 2.623072194490122e-27, 1.652005859234321e-29, 6.778938664639984e-32, 1.6858919846509488e-34, 2.2957106618301727e-37, 1.4708748831426498e-40, 3.460357810709804e-44, 1.868868946447634e-48, 7.070049564056169e-54,),
    ),
    53: (
        (0.0033927769332505985, 0.017854734911989075, 0.04378546651235629, 0.0810437103343318, 0.12942380300462983, 0.1886663378906337, 0.25846593533804674, 0.3384794661403742, 0.42833458932296636, 0.5276382536781349, 0.6359848376895051, 0.7529636709046474, 0.8781657586856151, 1.0111896089158896, 1.1516461266388067, 1.2991625970763439, 1.4533858178816887, 1.6139844684796638, 1.7806508197425412, 1.953101893378856, 2.1310801797304717, 2.314354017449492, 2.502717730699868, 2.695991610653152, 2.8940218193118796, 3.0966802859771922, 3.303864660628476, 3.515498384605129, 3.73153093771851, 3.95193832275076, 4.176723853820072, 4.405919325157931, 4.639586652702462, 4.877820104436178, 5.120749269421711, 5.368542964352262, 5.621414346853164, 5.879627607330649, 6.14350676287626, 6.413447305609682, 6.689931811285112, 6.973551174812917, 7.265034057579791, 7.565288690427414, 7.875463937575436, 8.197041669411984, 8.531982663498187, 8.88296991270355, 9.253843842096016, 9.650457567739172, 10.082597577757355, 10.569292114664922, 11.160409040527872,),
        (0.00870438948451924, 0.020207057229572174, 0.03156332974659389, 0.042577604438518615, 0.052963998528527775, 0.06231725769472606, 0.07012198366660843, 0.0757973973297583, 0.07878127483488633, 0.0786464994833463, 0.07522846778644479, 0.06872703696957613, 0.05974132137285021, 0.04920736248062484, 0.038238825617247015, 0.027909650742101267, 0.019046208052423918, 0.012097250222659001, 0.00711886009862737, 0.003863747743844747, 0.001925388879526124, 0.0008769635575848295, 0.00036344542292824424, 0.00013643418834757042, 4.6179057834881496e-05, 1.4027586475569004e-05, 3.8059807893839348e-06, 9.178250425639327e-07, 1.957227369748774e-07, 3.6709722627120046e-08, 6.021656906447649e-09, 8.586559906973072e-10, 1.0574647795967203e-10, 1.116844315687279e-11, 1.003803368046105e-12, 7.612675964660129e-14, 4.82552418401603e-15, 2.529583923492106e-16, 1.08345496574297e-17, 3.7396074612177335e-19, 1.0236200252037821e-20, 2.1806711597323944e-22, 3.535701681727744e-24, 4.246835931956068e-26, 3.6552223959689024e-28, 2.161843714091859e-30, 8.322144477410992e-33, 1.9389027319944934e-35, 2.4686422040934257e-38, 1.4748267137281177e-41, 3.222006958372305e-45, 1.6050014490408736e-49, 5.522937848057906e-55,),
    ),
    54: (
        (0.0032998627845938562, 0.017366528841292913, 0.04259155229197895, 0.07884258867243273, 0.1259264922323657, 0.18359928483521207, 0.2515732561970639, 0.3295244834682642, 0.4171006702529663, 0.5139289930743449, 0.6196236594420247, 0.733792939250196, 0.8560454996201158, 0.9859959410267144, 1.1232694931862515, 1.2675058791890028, 1.4183623943853156, 1.5755162728413752, 1.7386664300991628, 1.9075346783931932, 2.081866511458858, 2.2614315525855324, 2.446023753347774, 2.63546142290504, 2.8295871599972893, 3.028267752608835, 3.2313941043379413, 3.4388812422580086, 3.650668458871833, 3.866719641019435, 4.0870238417453315, 4.311596157758377, 4.540478986082114, 4.773743750059603, 5.011493208933248, 5.253864499617355, 5.5010331083648305, 5.753218040518521, 6.010688559002032, 6.273773013622201, 6.542870511565065, 6.818466531946072, 7.101154146504001, 7.3916634240908206, 7.690903151014633, 8.000021752583185, 8.320499428637158, 8.654293657154838, 9.00408181525432, 9.373695138879919, 9.768971474916755, 10.199670276858631, 10.684765154570457, 11.273976888337883,),
        (0.008466104792793817, 0.019655929922853706, 0.030709870791479407, 0.04144569427296378, 0.05159815935816282, 0.06079051178349998, 0.06854109670622589, 0.07430187794421617, 0.07753269185750412, 0.07780650842763395, 0.0749276882970504, 0.0690317996866628, 0.06062919870987931, 0.050562553922909995, 0.039873142107508135, 0.029605144126529877, 0.020605793912941133, 0.013385520005053234, 0.008079659705700609, 0.004511877562761436, 0.002320762355364112, 0.0010947689622732577, 0.00047156767713981665, 0.0001846722040245621, 6.546162486854339e-05, 2.0910569694714212e-05, 5.991919216504798e-06, 1.5330633850094356e-06, 3.4853796937289605e-07, 7.005622824241924e-08, 1.2383623675416842e-08, 1.9143090761246363e-09, 2.5723526642053865e-10, 2.985323339314601e-11, 2.971254351501494e-12, 2.5166886776563683e-13, 1.7987212008143873e-14, 1.0745445427565098e-15, 5.3086174804294125e-17, 2.1427970724980996e-18, 6.969483354379933e-20, 1.797460474904413e-21, 3.607167565752164e-23, 5.507773457592206e-25, 6.2274054005273606e-27, 5.0425139634270715e-29, 2.8035821889958224e-31, 1.013512274593617e-33, 2.214346315042786e-36, 2.638803630143891e-39, 1.4715143242663254e-42, 2.988497481594621e-46, 1.3746164757921048e-50, 4.308022821556129e-56,),
    ),
    55: (
        (0.003211112830290912, 0.01690015668335085, 0.041450832301898125, 0.07673901413851249, 0.12258311922684594, 0.17875345214384306, 0.24497870353456552, 0.32095283478889663, 0.4063422827494558, 0.5007932068593374, 0.6039385098516553, 0.715404411413413, 0.834816413520694, 0.9618045559382025, 1.096007914846206, 1.2370783433326373, 1.3846834880921342, 1.538509142069835, 1.6982610089199177, 1.8636659635229929, 2.0344728951487703, 2.2104532178635066, 2.391401127994005, 2.5771336821529087, 2.7674907625224083, 2.9623349895628386, 3.161551636637852, 3.365048596662048, 3.572756448123553, 3.784628667024191, 4.000642032750855, 4.220797280071816, 4.44512005693687, 4.67366225941544, 4.906503832208705, 5.143755147623097, 5.385560110553646, 5.63210018624738, 5.883599618114645, 6.1403322051826965, 6.402630159881597, 6.67089579458582, 6.945617136853907, 7.227389130961282, 7.516942996263361, 7.815187862848922, 8.123271550263784, 8.442672467642755, 8.775344725369864, 9.123960080632738, 9.49234066356586, 9.88630927232487, 10.315598798917135, 10.799129272606868, 11.38647736963276,),
        (0.008238493723054425, 0.01912935983082663, 0.029893950106237292, 0.04036224044752666, 0.050287829025850384, 0.05932009089639212, 0.06700861659578199, 0.0728363309522866, 0.07628519188855917, 0.07693119968130632, 0.0745538606087888, 0.0692329592205812, 0.06139857085466879, 0.05180527051233697, 0.04142142415207773, 0.03125461853177532, 0.022162056287044346, 0.01470504751375723, 0.00909148959640273, 0.005215220712722306, 0.0027640393059672184, 0.0013477892177670505, 0.0006021192096121184, 0.0002454146918366787, 9.087438003197727e-05, 3.044045210084488e-05, 9.184266650804009e-06, 2.4848057740652155e-06, 6.000763543369184e-07, 1.2874245631211419e-07, 2.441617177233588e-08, 4.071882678268746e-09, 5.938175631603117e-10, 7.527601531224523e-11, 8.241475999527466e-12, 7.738379060464084e-13, 6.183693045838895e-14, 4.169662850142985e-15, 2.3500937162776173e-16, 1.09537096354043e-17, 4.171199722151364e-19, 1.2798009894090525e-20, 3.1131473858615504e-22, 5.89127813660095e-24, 8.47980476811515e-26, 9.034323227925088e-28, 6.889068535684817e-30, 3.60422759851802e-32, 1.2247860791606365e-34, 2.511883442807001e-37, 2.804459989422761e-40, 1.4612207397729123e-43, 2.761557352153476e-47, 1.1741801350760109e-51, 3.35556554345728e-57,),
    ),
    56: (
        (0.003126270429786724, 0.016454276368935053, 0.040360052168764746, 0.07472705833370548, 0.11938440673170184, 0.17411563990401532, 0.23866468831037893, 0.31274218156822586, 0.39603207680551483, 0.4881983572169867, 0.5888915564802022, 0.6977549051469669, 0.8144299464609932, 0.9385615218133271, 1.06980207491178, 1.2078152655380687, 1.3522789169613942, 1.5028873454058211, 1.6593531360669187, 1.8214084392235366, 1.988805863426115, 2.161319042025252, 2.3387429457800515, 2.520894009109586, 2.70761013165905, 2.8987506109718595, 3.0941960567375886, 3.293848332732016, 3.4976305694947842, 3.705487289270126, 3.917384685034261, 4.133311097866457, 4.3532777419127, 4.577319734342061, 4.805497499880827, 5.0378986370161805, 5.274640357702565, 5.515872647247356, 5.761782340350408, 6.012598379733124, 6.268598625950579, 6.530118737736204, 6.797563869379644, 7.07142428220468, 7.352296523314583, 7.640912735141353, 7.938182204863604, 8.24525200026711, 8.563598636596573, 8.895172801815953, 9.242640638218775, 9.609815258023975, 10.002504629378409, 10.430415543717483, 10.912415466815066, 11.497939839874483,),
        (0.0080208989060448, 0.01862584488447316, 0.02911331226247102, 0.03932444482945911, 0.04903005979364384, 0.05790351386588391, 0.06552333820111507, 0.07140168339817181, 0.07504245844503026, 0.07602704994181986, 0.07411541536781474, 0.06933916355274881, 0.0620560625530257, 0.05293813629048723, 0.042881424876124334, 0.032851668582303956, 0.02370650550690492, 0.016047827515576374, 0.010148829762340723, 0.005971491443334683, 0.003255670513166842, 0.001638025024386807, 0.0007574612777475104, 0.0003206258715285022, 0.00012372791721578823, 4.33497494777368e-05, 1.3732507374531156e-05, 3.916663492558813e-06, 1.0013722936793457e-06, 2.2847220761605963e-07, 4.63014076504323e-08, 8.293583511548817e-09, 1.3062294066084015e-09, 1.7989560590986236e-10, 2.15359342684988e-11, 2.2266737530503384e-12, 1.974494454546734e-13, 1.4901130064856616e-14, 9.489560422615284e-16, 5.0513370964148045e-17, 2.22356655126409e-18, 7.996400441728345e-20, 2.3167426683114012e-21, 5.320697708856567e-23, 9.504111312583801e-25, 1.2908622057914494e-26, 1.2971476263889033e-28, 9.323873029470977e-31, 4.5945991265356966e-33, 1.4690617875651248e-35, 2.830829927315559e-38, 2.9639142334417454e-41, 1.4443121707739343e-44, 2.5426178937232726e-48, 1.000393037784963e-52, 2.6100699188814546e-58,),
    ),
    57: (
        (0.0030450989236237005, 0.01602764998875024, 0.039316208692983884, 0.0728012468493487, 0.11632178097397915, 0.1696736376286033, 0.23261492296547795, 0.3048718153719057, 0.3861446696234959, 0.4761142130025755, 0.574447611383221, 0.6808042170398292, 0.7948408543809447, 0.9162165463380684, 1.044596627925676, 1.1796562315738248, 1.3210831596704822, 1.4685801829082465, 1.6218668188990453, 1.7806806550136018, 1.944778283699378, 2.1139359188789375, 2.287949759610741, 2.466636163041369, 2.6498316836484688, 2.837393030544311, 3.029196989697363, 3.225140353721339, 3.4251398986719557, 3.629132445319627, 3.8370750418526436, 4.048945306152658, 4.264741968980166, 4.484485665035991, 4.708220027532538, 4.936013154499398, 5.167959532858914, 5.404182531258986, 5.64483760761447, 5.890116426636281, 6.140252153018384, 6.3955262879200205, 6.656277566785025, 6.922913663107187, 7.1959267923740615, 7.4759148649945, 7.763610744858645, 8.05992371139787, 8.365999952864684, 8.683314002232981, 9.013813081649792, 9.360157731401149, 9.726152137299554, 10.117589653976461, 10.544151421154984, 11.024653324787291, 11.608392336927542,),
        (0.007812714110644004, 0.018143998871609352, 0.02836587178166665, 0.038329708670756184, 0.047822087290551575, 0.056538398532775126, 0.06408398916587908, 0.0699985595332987, 0.07380762080028913, 0.07509980898084231, 0.07362007127536106, 0.06935861983724034, 0.06260835311226119, 0.053964394190579884, 0.0442519200226521, 0.03439096516502334, 0.025231397905841665, 0.017406041458690055, 0.01124581709069345, 0.006777773207092487, 0.0037954875452192367, 0.0019670720560376774, 0.0009398088696852662, 0.0004123091226857, 0.00016544956927620972, 6.048575948381395e-05, 2.0065616485416893e-05, 6.015921105848181e-06, 1.6233045231503742e-06, 3.9254590773282107e-07, 8.469334583067618e-08, 1.622807177313819e-08, 2.748079708602235e-09, 4.0916298129432156e-10, 5.326925800299785e-11, 6.028355527896768e-12, 5.892199816577271e-13, 4.93938181394533e-14, 3.524046897245788e-15, 2.121684332431318e-16, 1.0677077981131965e-17, 4.443198261469762e-19, 1.5104710161224678e-20, 4.1363826231935996e-22, 8.977671242901358e-24, 1.5151435337005595e-25, 1.9436757844202943e-27, 1.8439053177615623e-29, 1.2505169325969962e-31, 5.809511035419741e-34, 1.7493386881004745e-36, 3.170147672381804e-39, 3.1155384155785114e-42, 1.421225570109702e-45, 2.332827281428853e-49, 8.502042911043085e-54, 2.0274732792448314e-59,),
    ),
    58: (
        (0.002967379764687498, 0.015619134086993816, 0.03831652659138577, 0.07095651760352475, 0.11338730781973741, 0.16541613561587146, 0.2268143064747195, 0.29732251603208687, 0.3766564770038688, 0.46451265486540216, 0.5605739105977556, 0.6645148768620157, 0.7760069324215344, 0.8947226806450714, 1.0203398771220822, 1.1525447860608888, 1.2910349736945625, 1.4355215688435488, 1.5857310362732848, 1.7414065182280423, 1.9023088044807677, 2.068216992471306, 2.2389288976417085, 2.414261270840855, 2.59404987544097, 2.7781494722130846, 2.9664337555333358, 3.1587952805049007, 3.3551454173590325, 3.5554143672611738, 3.7595512725842526, 3.967524455013785, 4.179321816747985, 4.39495144385517, 4.614442456977581, 4.837846163638868, 5.065237579313465, 5.296717402454222, 5.53241455377578, 5.7724894251290095, 6.0171380326244295, 6.266597338959001, 6.521152111661472, 6.781143834017226, 7.046982411418096, 7.319161764574682, 7.598280954099295, 7.885073386331863, 8.180448187272878, 8.485550553831846, 8.801852961264931, 9.131299132422164, 9.476544025148007, 9.841382993154351, 10.231594991423338, 10.656835944984671, 11.135871111627994, 11.717861662252886,),
        (0.007613379465728036, 0.017682540721800456, 0.02764969787503324, 0.037375616040188304, 0.04666131848601704, 0.05522246257432516, 0.06268925229448823, 0.06862732931983813, 0.07258332310184844, 0.07415456976386783, 0.073074875153126, 0.0692990742815928, 0.06306208575918654, 0.054887768675940994, 0.04553257830598201, 0.03586819291343069, 0.026729769956002156, 0.01877216810959672, 0.012376374565184244, 0.007630606992788993, 0.004382723125548487, 0.0023360865386311334, 0.0011511763133963675, 0.0005224630967986263, 0.00021756211015807846, 8.28079000396423e-05, 2.869818907616052e-05, 9.020738912270461e-06, 2.5616059769106653e-06, 6.544826566949157e-07, 1.4982169797119312e-07, 3.059458466193234e-08, 5.547801166298307e-09, 8.890141783792956e-10, 1.2525157047458184e-10, 1.5429966244869025e-11, 1.6523087934264096e-12, 1.5282051727061562e-13, 1.2122675783623559e-14, 8.184608562881475e-16, 4.663065232378685e-17, 2.2206177825132255e-18, 8.744446194851537e-20, 2.812762480176868e-21, 7.28742205770589e-23, 1.4961401338766411e-24, 2.3878570663721292e-26, 2.8958410666228773e-28, 2.5958861987656043e-30, 1.6625250785229543e-32, 7.287893424514265e-35, 2.0685302526436606e-37, 3.528443362944667e-40, 3.257802660860442e-43, 1.392455662115077e-46, 2.133068378741958e-50, 7.208169000641022e-55, 1.5728662036356015e-60,),
    ),
    59: (
        (0.0028929108525262283, 0.015227671005409317, 0.03735843773901525, 0.06918818361025933, 0.11057363563909799, 0.1613326454942553, 0.22124882113061378, 0.2900764240669116, 0.36754556142853995, 0.4533674994141946, 0.5472399149522403, 0.6488519254976421, 0.7578887701802205, 0.8740360516526593, 0.9969834830490396, 1.1264281159209528, 1.2620770513877861, 1.4036496573992143, 1.5508793300041945, 1.7035148463556344, 1.8613213626293292, 2.024081111992044, 2.191593857110318, 2.363677149268806, 2.5401664426710697, 2.720915108505516, 2.905794389330319, 3.0946933306123285, 3.287518723109687, 3.484195087419343, 3.684664730587229, 3.8888879043597573, 4.096843095617166, 4.308527481995674, 4.523957589981306, 4.743170199275369, 4.966223546609583, 5.1931988953259, 5.424202555241975, 5.659368462527195, 5.898861464390157, 6.142881502669715, 6.391668960605465, 6.645511538607137, 6.90475317452552, 7.169805749333024, 7.441164666895366, 7.719429948109524, 8.005335382613575, 8.299789814118608, 8.603937350392751, 8.919248344846427, 9.247662996164616, 9.591830704989324, 9.955538089340788, 10.344549915473417, 10.768497319144991, 11.24609585100091, 11.82637345578784,),
        (0.007422377200689884, 0.01724028494054578, 0.026963000761207768, 0.03645991879284123, 0.045545320336331144, 0.053953523053410696, 0.061337783783340115, 0.06728814994337026, 0.07137178548177561, 0.07319583332739751, 0.07248624399274808, 0.06916780358904412, 0.06342379547246962, 0.055712345616744714, 0.046723837866924266, 0.037279977546611144, 0.028195450328283588, 0.020139072133208927, 0.013534330188915755, 0.008526084808238814, 0.0050160460833159936, 0.002745764820895899, 0.0013933295805544684, 0.0006530369354705038, 0.000281657871635588, 0.0001113807596776954, 4.02343344584845e-05, 1.3226913408860509e-05, 3.942259827150396e-06, 1.0611334287667364e-06, 2.569194965122699e-07, 5.5722295997435213e-08, 1.0779335280904677e-08, 1.8514808710378811e-09, 2.8101681555302784e-10, 3.7498998498962367e-11, 4.375341432422874e-12, 4.4376516171950715e-13, 3.887470260759383e-14, 2.9208993475616297e-15, 1.8679092848661572e-16, 1.0080240486568664e-17, 4.546821723618239e-19, 1.695829452459672e-20, 5.166110088102732e-22, 1.2674466927869746e-23, 2.463609702912145e-25, 3.721674194792467e-27, 4.2705285157256383e-29, 3.620476071671097e-31, 2.191562308128195e-33, 9.072838481369728e-36, 2.4294007420792156e-38, 3.9039750821648864e-41, 3.3893012219088407e-44, 1.358541839374103e-47, 1.9439797372641005e-51, 6.096863722150839e-56, 1.2186481774875454e-61,),
    ),
    60: (
        (0.002821505045702531, 0.014852281148879699, 0.036439562605665034, 0.06749189964734863, 0.107873944083121, 0.15741342887631585, 0.2159054397058223, 0.2831169257347325, 0.3587914949691459, 0.442654340315266, 0.5344171298505977, 0.6337827138710401, 0.7404495300206135, 0.8541156196418435, 0.9744821998260481, 1.1012567641699038, 1.2341557095396183, 1.3729065055389464, 1.5172494377981791, 1.6669389660004235, 1.821744743356996, 1.981452346782584, 2.1458637670745238, 2.31479770669405, 2.488089729917781, 2.6655923067066607, 2.847174788052443, 3.032723347138364, 3.2221409176415676, 3.4153471581017913, 3.6122784696371633, 3.8128880935399967, 4.017146315573963, 4.225040805287075, 4.436577121574057, 4.651779420374331, 4.870691407214188, 5.093377586919163, 5.31992487613829, 5.550444662649757, 5.7850754206886545, 6.023986026624399, 6.267379968555713, 6.515500713448841, 6.7686385967638545, 7.027139748833029, 7.291417797086909, 7.561969430091655, 7.839395459503363, 8.124429916586035, 8.417981248714774, 8.721192389039624, 9.035531514917936, 9.362935283485276, 9.706047568227477, 10.068646349397227, 10.456482412249926, 10.879162517360653, 11.35535339991401, 11.933952265101349,),
        (0.007239227840742276, 0.016816133053127992, 0.02630411937856595, 0.03558052292426345, 0.0444718091069563, 0.052729494997581346, 0.06002822800149139, 0.06598100131234684, 0.07017485798913409, 0.07222756843380847, 0.0718600076658264, 0.06897161543352467, 0.06369985268419022, 0.05644246843757619, 0.04782679063537019, 0.03862380705003636, 0.02962305373612889, 0.021500071870117498, 0.01471352355959577, 0.009459944548332775, 0.0056936080120964395, 0.0031963364432900125, 0.001667746718781676, 0.0008058864268886996, 0.00035936932117857745, 0.00014736293607802873, 5.5368918155461155e-05, 1.899378362968433e-05, 5.927075973138319e-06, 1.6762487851169056e-06, 4.2800618698966516e-07, 9.828052085085226e-08, 2.0212386953597484e-08, 3.707213299113784e-09, 6.036819278266683e-10, 8.686310581062315e-11, 1.0988258994464897e-11, 1.215423906537757e-12, 1.1686421606638843e-13, 9.705468482182793e-15, 6.913460247019609e-16, 4.191499728970064e-17, 2.1444634854196015e-18, 9.170224310587884e-20, 3.2423216292677497e-21, 9.362691927577371e-23, 2.177060560422316e-24, 4.009878305146164e-26, 5.738505623768771e-28, 6.235712935617774e-30, 5.003883233295469e-32, 2.865246639386028e-34, 1.121155974658958e-36, 2.834498937594677e-39, 4.294666841557048e-42, 3.5087750632855714e-45, 1.3200552805528382e-48, 1.765978696385237e-52, 5.145141003128292e-57, 9.43040552282634e-63,),
    ),
    61: (
        (0.0027529888305803307, 0.014492056061247878, 0.03555769362406234, 0.06586363236038004, 0.10528189808030772, 0.15364943318620491, 0.21077204181524936, 0.27642854930929517, 0.35037523538410714, 0.4323504044749485, 0.5220789419735902, 0.6192767205945545, 0.7236547459326969, 0.8349229583040365, 0.9527936359605603, 1.0769843706104665, 1.20722060851333, 1.3432377685639703, 1.48478296256729, 1.6316163525682001, 1.7835121861205372, 1.9402595533772669, 2.101662910523886, 2.2675424129957364, 2.4377340996900756, 2.6120899664913786, 2.790477964268905, 2.9727819533899424, 3.1589016439588598, 3.3487525486231, 3.5422659730251365, 3.7393890679446438, 3.9400849669839473, 4.144333034432202, 4.352129249863895, 4.56348675930712, 4.778436627767158, 4.997028834951763, 5.219333565846299, 5.44544286123657, 5.6754727116915955, 5.909565703829429, 6.147894362766401, 6.390665383824762, 6.638125016496096, 6.890565964748045, 7.148336316717444, 7.411851241096942, 7.681608533498563, 7.95820964479318, 8.242388721619553, 8.535053714036719, 8.837346305955235, 9.150732453179256, 9.47714526041638, 9.819223108103177, 10.180735437665613, 10.567419257705154, 10.988857356651604, 11.463668517822718, 12.0406216093501,),
        (0.007063486801896447, 0.016409065937390395, 0.025671510332333954, 0.034735476171761294, 0.04343864036073374, 0.05154838925407462, 0.05875922940533221, 0.06470571638936143, 0.0689940681146131, 0.07125326614499783, 0.07120145130794735, 0.06871685586350544, 0.06389642047127442, 0.0570826493275183, 0.04884307571511698, 0.039897949950644, 0.031007960194515457, 0.02284898806130026, 0.01590789890084354, 0.010427663085372836, 0.006413098706941358, 0.0036875696730452106, 0.0019755873196746674, 0.0009827327578006261, 0.0004523372947552208, 0.0001919919704732946, 7.488586783758927e-05, 2.6748882987488816e-05, 8.719198721424667e-06, 2.5844251634941574e-06, 6.940409552165867e-07, 1.682336910514183e-07, 3.666610494582098e-08, 7.156308793232819e-09, 1.2455219331597046e-09, 1.9244999929078668e-10, 2.6274658784221347e-11, 3.1536849064438767e-12, 3.3098433883340217e-13, 3.0196615103111224e-14, 2.3795706504152544e-15, 1.6083857080926724e-16, 9.252950886979224e-18, 4.492027111996962e-19, 1.8226520196375352e-20, 6.114405910394562e-22, 1.6750623306331386e-23, 3.694619230108353e-25, 6.4537232274105075e-27, 8.756629983663468e-29, 9.01826098804605e-31, 6.85539181876719e-33, 3.7162314075554683e-35, 1.3755252999441526e-37, 3.286090514890384e-40, 4.698130770560909e-43, 3.615130552612655e-46, 1.2775865945932324e-49, 1.599285646079779e-53, 4.332368787913332e-58, 7.288912009190304e-64,),
    ),
    62: (
        (0.0026872011278700004, 0.014146152215039858, 0.03471078026175099, 0.06429963340156337, 0.10279160645065753, 0.15003223384495745, 0.20583733844743674, 0.2699968713380105, 0.34227901396942395, 0.4224344216834879, 0.5102004710912267, 0.6053053863450011, 0.7074721407504484, 0.816422054841793, 0.9318780370447699, 1.0535674364354128, 1.181224497605322, 1.3145924245685041, 1.453425073764562, 1.5974883056579199, 1.7465610305753099, 1.9004359877752282, 2.058920297869441, 2.2218358281767685, 2.389019408894919, 2.560322935569808, 2.7356133905896503, 2.9147728136252087, 3.0976982483044333, 3.2843016901227924, 3.4745100587841162, 3.668265216950165, 3.8655240568496643, 4.066258676463097, 4.270456668182424, 4.478121545108077, 4.689273333712598, 4.903949366785118, 5.122205317817749, 5.344116527937922, 5.569779690039709, 5.799314973240765, 6.032868696120879, 6.270616692250158, 6.512768560612801, 6.759573063312719, 7.011325033805906, 7.268374307498183, 7.531137410250222, 7.800113085430552, 8.075903287470695, 8.359242165767027, 8.651037083631685, 8.952428410694024, 9.264879843356455, 9.590320928676787, 9.931384591565378, 10.291831834156806, 10.67738608921714, 11.097606565307379, 11.57106493056935, 12.146404038504974,),
        (0.0068947413379556064, 0.016018136940775567, 0.025063737936893524, 0.03392295673940349, 0.042443799592877675, 0.050408309816376076, 0.057529442074624265, 0.0634620070832617, 0.06783066261421869, 0.07027598953686104, 0.07051535665860022, 0.06840942190049876, 0.06401942310023151, 0.05763749417514944, 0.04977478236217341, 0.041101373269695325, 0.0323462830022146, 0.024180175570470204, 0.017111584083789492, 0.011424545046296981, 0.007171807552605343, 0.004218788079781007, 0.002317671427355545, 0.0011851252660071497, 0.0005621781405824518, 0.0002465658872304855, 9.965341194611202e-05, 3.6990977367851334e-05, 1.2568267656089697e-05, 3.895314569348582e-06, 1.0974392200577533e-06, 2.8004977107456345e-07, 6.449190127062699e-08, 1.335149226388131e-08, 2.475009559883747e-09, 4.090987923916453e-10, 6.002932112963684e-11, 7.782905224794021e-12, 8.871165109010854e-13, 8.841616240699351e-14, 7.660402036261087e-15, 5.732826753840996e-16, 3.679961393615266e-17, 2.0105626794851477e-18, 9.269543143985605e-20, 3.571762541574217e-21, 1.137802754886625e-22, 2.959591979682757e-24, 6.197150611524587e-26, 1.0274523834686153e-27, 1.3227965002702956e-29, 1.2921703979844403e-31, 9.312308093889034e-34, 4.782784017212154e-36, 1.6758848972932742e-38, 3.7860907097040846e-41, 5.111696485081476e-44, 3.7074539770488243e-47, 1.231734244540156e-50, 1.443948649502216e-54, 3.6401369995819226e-59, 5.6271638691279465e-65,),
    ),
    63: (
        (0.0026239922207427816, 0.013813785431534524, 0.03389691559868784, 0.06279641525419166, 0.10039758461246423, 0.1465539821010294, 0.20109080376320393, 0.26380843179729246, 0.33448623390212057, 0.4128865062927158, 0.49875843539667974, 0.591841963215773, 0.6918714598006438, 0.79857912800411, 0.9116980879928939, 1.0309651101404562, 1.156122983712168, 1.2869225245003681, 1.4231242369980335, 1.5644996558667383, 1.710832397636072, 1.8619189571847383, 2.017569285078806, 2.1776071817673084, 2.3418705434153053, 2.510211492191037, 2.6824964214544993, 2.8586059837929096, 3.038435047428716, 3.221892644353552, 3.408901931744245, 3.5994001868961094, 3.793338855151784, 3.990683670196521, 4.191414866729875, 4.395527507030818, 4.60303194547177, 4.813954458832671, 5.028338075635973, 5.246243645115101, 5.4677511964792735, 5.692961652758861, 5.9219989820268815, 6.155012894123956, 6.3921822260288526, 6.633719208029939, 6.879874872486597, 7.130945967595589, 7.3872838868121145, 7.649306347725225, 7.917512898422564, 8.192505875314856, 8.47501933001745, 8.76595995989186, 9.066466763711858, 9.378001147360862, 9.70248909994314, 10.042558131224997, 10.401960903822138, 10.786407471854378, 11.205433845826414, 11.677565389621922, 12.25132118826803,),
        (0.006732607798200719, 0.01564246569068032, 0.024479465231098382, 0.03314126303597126, 0.04148539348755682, 0.04930745077734517, 0.05633753727629084, 0.062249486330185115, 0.06668564427495587, 0.06929841882764524, 0.06980604185074214, 0.06805477791577934, 0.06407452403308009, 0.058111639844134706, 0.05062436271135638, 0.04223366214546065, 0.03363482838136917, 0.025488540295713576, 0.018318955758575742, 0.012445805354149152, 0.007966688255453516, 0.004788896471866612, 0.0026944678414237496, 0.0014144092975117485, 0.0006904510127470066, 0.0003124220072320505, 0.0001306162785285355, 5.0291197118884377e-05, 1.7774942871463515e-05, 5.7479469313207745e-06, 1.694919772598398e-06, 4.541816973113926e-07, 1.102112617741169e-07, 2.4130113919183913e-08, 4.7488574686049125e-09, 8.367583947293324e-10, 1.3145839795444318e-10, 1.8333496950682463e-11, 2.2591204332325845e-12, 2.4473432282729656e-13, 2.318289629907989e-14, 1.9090474678267318e-15, 1.3579074975873949e-16, 8.284862313385048e-18, 4.3022903710656765e-19, 1.8852644454849418e-20, 6.904142439018765e-22, 2.0901394585582342e-23, 5.166211725166285e-25, 1.0277665053410438e-26, 1.6185657057191126e-28, 1.978792932555672e-30, 1.8348437818065396e-32, 1.2545649440882264e-34, 6.109362536895557e-37, 2.0280650208808442e-39, 4.335999004362034e-42, 5.532446947750094e-45, 3.7850217424657884e-48, 1.1830939509340592e-51, 1.2998677562331163e-55, 3.0521078061258617e-60, 4.339348443957656e-66,),
    ),
    64: (
        (0.0025632227904479727, 0.013494225858531375, 0.03311432423821593, 0.06135072943829593, 0.09809472092341022, 0.14320735788230668, 0.1965226133701957, 0.257850657190316, 0.32698137796594406, 0.40368804966897315, 0.48773102895985876, 0.5788613774991325, 0.676824319286771, 0.7813624621948286, 0.8922187327688487, 1.0091389924758556, 1.1318743207717237, 1.2601829649782168, 1.393831968696209, 1.5325984993252388, 1.6762709014115083, 1.8246495063430346, 1.9775472307573312, 2.1347899963467993, 2.296217002944019, 2.4616808852059875, 2.631047781203063, 2.804197339009631, 2.9810226851920505, 3.1614303770529952, 3.345340358741423, 3.5326859399694914, 3.7234138151709333, 3.9174841405628302, 4.114870686811894, 4.3155610859501055, 4.51955719295382, 4.726875585159739, 4.937548226668564, 5.151623330402557, 5.369166457986966, 5.590261907756589, 5.815014454861061, 6.043551525975293, 6.276025916442914, 6.512619192649281, 6.753545971343118, 6.999059337110033, 7.249457759594562, 7.505094019946434, 7.766386878571264, 8.033836559651458, 8.30804567248422, 8.589748081086391, 8.87984974673733, 9.179488248276032, 9.490122675877053, 9.813675464661701, 10.15276875201155, 10.511146960731145, 10.894506959784238, 11.312361933267729, 11.783191727027235, 12.355393831056901,),
        (0.00657672915985768, 0.01528123251892803, 0.023917445859480475, 0.032388804326508785, 0.040561641766980516, 0.048244093031327415, 0.05518220939486762, 0.06106768690403352, 0.06555980420311155, 0.06832289222199217, 0.06907739930943291, 0.06765797463916123, 0.06406711173841613, 0.058509702417663616, 0.05139455409653044, 0.043294942607889894, 0.03487104931552875, 0.026769543480926535, 0.019524691162766745, 0.013486644179552726, 0.00879442460989674, 0.005396414385361247, 0.0031060913875934335, 0.001671699950041796, 0.000838626468526974, 0.0003909138133692048, 0.00016878503453129318, 6.729205745984032e-05, 2.4694514172990444e-05, 8.314985890428534e-06, 2.560622857968549e-06, 7.188286518293643e-07, 1.8333235121467978e-07, 4.233326643218233e-08, 8.818505380856176e-09, 1.651032917900721e-09, 2.76734902099786e-10, 4.135502864859251e-11, 5.485932926901414e-12, 6.429936449850682e-13, 6.625624472613964e-14, 5.969942968230874e-15, 4.676240990304543e-16, 3.163982886063193e-17, 1.836267258932133e-18, 9.07056364625579e-20, 3.780768294089226e-21, 1.316950068415546e-22, 3.7918528603773266e-24, 8.91277310695528e-26, 1.6858786687097207e-27, 2.5237969354577645e-29, 2.9321493580132915e-31, 2.5827182676974983e-33, 1.676661504159487e-35, 7.747174893302043e-38, 2.4381846927892058e-40, 4.936837592099204e-43, 5.957259952880428e-46, 3.8473062450599815e-49, 1.1322492221568722e-52, 1.1668184669903602e-56, 2.553855924881448e-61, 3.342570767962513e-67,),
    ),
}
