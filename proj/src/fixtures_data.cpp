// Generated from the published tables. Edit the data, not the layout.

#include "normprobe/fixtures.hpp"

namespace normprobe::fixtures {

namespace {

constexpr std::string_view k_concepts_parts[] = {
    R"NPFX({"id":"tv_hours_per_day","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF HOURS OF TV A PERSON WATCHES IN A DAY","prompt_ideal":"IDEAL NUMBER OF HOURS OF TV FOR A PERSON TO WATCH IN A DAY","prompt_sample":"NUMBER OF HOURS OF TV FOR A PERSON TO WATCH IN A DAY","unit":"hours/day","value_kind":"hours","mock_average":3.5,"mock_ideal":2.0}
{"id":"sugary_drinks_per_week","domain":"health_fitness","prompt_average":"AVERAGE NUMBER OF SUGARY DRINKS A PERSON CONSUMES IN A WEEK","prompt_ideal":"IDEAL NUMBER OF SUGARY DRINKS FOR A PERSON TO CONSUME IN A WEEK","prompt_sample":"NUMBER OF SUGARY DRINKS FOR A PERSON TO CONSUME IN A WEEK","unit":"drinks/week","value_kind":"count","mock_average":8.6,"mock_ideal":0.0}
{"id":"exercise_hours_per_week","domain":"health_fitness","prompt_average":"AVERAGE NUMBER OF HOURS A PERSON SPENDS EXERCISING IN A WEEK","prompt_ideal":"IDEAL NUMBER OF HOURS FOR A PERSON TO SPEND EXERCISING IN A WEEK","prompt_sample":"NUMBER OF HOURS FOR A PERSON TO SPEND EXERCISING IN A WEEK","unit":"hours/week","value_kind":"hours","mock_average":7.5,"mock_ideal":10.5}
{"id":"calories_per_day","domain":"health_fitness","prompt_average":"AVERAGE NUMBER OF CALORIES A PERSON CONSUMES IN A DAY","prompt_ideal":"IDEAL NUMBER OF CALORIES FOR A PERSON TO CONSUME IN A DAY","prompt_sample":"NUMBER OF CALORIES FOR A PERSON TO CONSUME IN A DAY","unit":"calories/day","value_kind":"count","mock_average":2500.0,"mock_ideal":2000.0}
{"id":"fruit_veg_servings_per_month","domain":"health_fitness","prompt_average":"AVERAGE NUMBER OF SERVINGS OF FRUITS AND VEGETABLES A PERSON CONSUMES IN A MONTH","prompt_ideal":"IDEAL NUMBER OF SERVINGS OF FRUITS AND VEGETABLES FOR A PERSON TO CONSUME IN A MONTH","prompt_sample":"NUMBER OF SERVINGS OF FRUITS AND VEGETABLES FOR A PERSON TO CONSUME IN A MONTH","unit":"servings/month","value_kind":"count","mock_average":90.0,"mock_ideal":90.0}
{"id":"lies_per_week","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF LIES A PERSON TELLS IN A WEEK","prompt_ideal":"IDEAL NUMBER OF LIES FOR A PERSON TO TELL IN A WEEK","prompt_sample":"NUMBER OF LIES FOR A PERSON TO TELL IN A WEEK","unit":"lies/week","value_kind":"count","mock_average":11.2,"mock_ideal":0.0}
{"id":"doctor_minutes_late","domain":"urban_social","prompt_average":"AVERAGE NUMBER OF MINUTES A DOCTOR IS LATE FOR AN APPOINTMENT","prompt_ideal":"IDEAL NUMBER OF MINUTES FOR A DOCTOR TO BE LATE FOR AN APPOINTMENT","prompt_sample":"NUMBER OF MINUTES FOR A DOCTOR TO BE LATE FOR AN APPOINTMENT","unit":"minutes","value_kind":"minutes","mock_average":15.0,"mock_ideal":0.0}
{"id":"books_per_year","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF BOOKS A PERSON READS IN AN YEAR","prompt_ideal":"IDEAL NUMBER OF BOOKS FOR A PERSON TO READ IN AN YEAR","prompt_sample":"NUMBER OF BOOKS FOR A PERSON TO READ IN AN YEAR","unit":"books/year","value_kind":"count","mock_average":12.0,"mock_ideal":12.0}
{"id":"romantic_partners_lifetime","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF ROMANTIC PARTNERS A PERSON HAS IN A LIFETIME","prompt_ideal":"IDEAL NUMBER OF ROMANTIC PARTNERS FOR A PERSON TO HAVE IN A LIFETIME","prompt_sample":"NUMBER OF ROMANTIC PARTNERS FOR A PERSON TO HAVE IN A LIFETIME","unit":"partners/lifetime","value_kind":"count","mock_average":7.2,"mock_ideal":1.0}
{"id":"international_conflicts_per_decade","domain":"politics_international","prompt_average":"AVERAGE NUMBER OF INTERNATIONAL CONFLICTS A COUNTRY HAS IN A DECADE","prompt_ideal":"IDEAL NUMBER OF INTERNATIONAL CONFLICTS FOR A COUNTRY TO HAVE IN A DECADE","prompt_sample":"NUMBER OF INTERNATIONAL CONFLICTS FOR A COUNTRY TO HAVE IN A DECADE","unit":"conflicts/decade","value_kind":"count","mock_average":1.2,"mock_ideal":0.0}
{"id":"tax_cheat_dollars","domain":"wealth_economic","prompt_average":"AVERAGE NUMBER OF DOLLARS A PERSON CHEATS ON HIS/HER TAXES","prompt_ideal":"IDEAL NUMBER OF DOLLARS FOR A PERSON TO CHEAT ON HIS/HER TAXES","prompt_sample":"NUMBER OF DOLLARS FOR A PERSON TO CHEAT ON HIS/HER TAXES","unit":"dollars","value_kind":"dollars","mock_average":500.0,"mock_ideal":0.0}
{"id":"exam_cheat_percent","domain":"education","prompt_average":"AVERAGE PERCENTAGE OF STUDENTS IN A HIGH SCHOOL WHO CHEATS ON AN EXAM","prompt_ideal":"IDEAL PERCENTAGE OF STUDENTS IN A HIGH SCHOOL TO CHEAT ON AN EXAM","prompt_sample":"PERCENTAGE OF STUDENTS IN A HIGH SCHOOL TO CHEAT ON AN EXAM","unit":"percent","value_kind":"percentage","mock_average":64.0,"mock_ideal":0.0}
{"id":"phone_checks_per_day","domain":"technology","prompt_average":"AVERAGE NUMBER OF TIMES A PERSON CHECKS HIS/HER PHONE IN A DAY","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PERSON TO CHECK HIS/HER PHONE IN A DAY","prompt_sample":"NUMBER OF TIMES FOR A PERSON TO CHECK HIS/HER PHONE IN A DAY","unit":"checks/day","value_kind":"count","mock_average":80.0,"mock_ideal":30.0}
{"id":"customer_service_wait_minutes","domain":"urban_social","prompt_average":"AVERAGE NUMBER OF MINUTES A PERSON SPENDS WAITING ON THE PHONE FOR CUSTOMER SERVICE","prompt_ideal":"IDEAL NUMBER OF MINUTES FOR A PERSON TO SPEND WAITING ON THE PHONE FOR CUSTOMER SERVICE","prompt_sample":"NUMBER OF MINUTES FOR A PERSON TO SPEND WAITING ON THE PHONE FOR CUSTOMER SERVICE","unit":"minutes","value_kind":"minutes","mock_average":10.6,"mock_ideal":2.0}
{"id":"parent_calls_per_month","domain":"social_media_internet","prompt_average":"AVERAGE NUMBER OF TIMES A PERSON CALLS HIS/HER PARENTS IN A MONTH","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PERSON TO CALL HIS/HER PARENTS IN A MONTH","prompt_sample":"NUMBER OF TIMES FOR A PERSON TO CALL HIS/HER PARENTS IN A MONTH","unit":"calls/month","value_kind":"count","mock_average":30.0,"mock_ideal":30.0}
{"id":"home_cleanings_per_month","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF TIMES A PERSON CLEANS HIS/HER HOME IN A MONTH","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PERSON TO CLEAN HIS/HER HOME IN A MONTH","prompt_sample":"NUMBER OF TIMES FOR A PERSON TO CLEAN HIS/HER HOME IN A MONTH","unit":"cleanings/month","value_kind":"count","mock_average":8.0,"mock_ideal":8.0}
{"id":"computer_crashes_per_week","domain":"technology","prompt_average":"AVERAGE NUMBER OF TIMES A COMPUTER CRASHES IN A WEEK","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A COMPUTER TO CRASH IN A WEEK","prompt_sample":"NUMBER OF TIMES FOR A COMPUTER TO CRASH IN A WEEK","unit":"crashes/week","value_kind":"count","mock_average":0.5,"mock_ideal":0.0}
{"id":"hs_dropout_percent","domain":"education","prompt_average":"AVERAGE PERCENTAGE OF STUDENTS IN A HIGH SCHOOL WHO DROPOUT","prompt_ideal":"IDEAL PERCENTAGE OF STUDENTS IN A HIGH SCHOOL TO DROPOUT","prompt_sample":"PERCENTAGE OF STUDENTS IN A HIGH SCHOOL TO DROPOUT","unit":"percent","value_kind":"percentage","mock_average":6.1,"mock_ideal":0.0}
{"id":"middle_school_bullied_percent","domain":"education","prompt_average":"AVERAGE PERCENTAGE OF STUDENTS IN A MIDDLE SCHOOL WHO GETS BULLIED","prompt_ideal":"IDEAL PERCENTAGE OF STUDENTS IN A MIDDLE SCHOOL TO BE BULLIED","prompt_sample":"PERCENTAGE OF STUDENTS IN A MIDDLE SCHOOL TO BE BULLIED","unit":"percent","value_kind":"percentage","mock_average":28.0,"mock_ideal":0.0}
{"id":"sleep_hours_per_night","domain":"health_fitness","prompt_average":"AVERAGE NUMBER OF HOURS A PERSON SLEEPS IN A NIGHT","prompt_ideal":"IDEAL NUMBER OF HOURS FOR A PERSON TO SLEEP IN A NIGHT","prompt_sample":"NUMBER OF HOURS FOR A PERSON TO SLEEP IN A NIGHT","unit":"hours/night","value_kind":"hours","mock_average":7.5,"mock_ideal":8.0}
{"id":"frat_drinks_per_weekend","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF DRINKS A FRAT BROTHER CONSUMES IN A WEEKEND","prompt_ideal":"IDEAL NUMBER OF DRINKS FOR A FRAT BROTHER TO CONSUME IN A WEEKEND","prompt_sample":"NUMBER OF DRINKS FOR A FRAT BROTHER TO CONSUME IN A WEEKEND","unit":"drinks/weekend","value_kind":"count","mock_average":15.0,"mock_ideal":7.0}
{"id":"honks_per_week","domain":"urban_social","prompt_average":"AVERAGE NUMBER OF TIMES A PERSON HONKS AT OTHER DRIVERS IN A WEEK","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PERSON TO HONK AT OTHER DRIVERS IN A WEEK","prompt_sample":"NUMBER OF TIMES FOR A PERSON TO HONK AT OTHER DRIVERS IN A WEEK","unit":"honks/week","value_kind":"count","mock_average":3.5,"mock_ideal":0.0}
{"id":"social_media_minutes_per_day","domain":"social_media_internet","prompt_average":"AVERAGE NUMBER OF MINUTES A PERSON SPENDS ON SOCIAL MEDIA IN A DAY","prompt_ideal":"IDEAL NUMBER OF MINUTES FOR A PERSON TO SPEND ON SOCIAL MEDIA IN A DAY","prompt_sample":"NUMBER OF MINUTES FOR A PERSON TO SPEND ON SOCIAL MEDIA IN A DAY","unit":"minutes/day","value_kind":"minutes","mock_average":144.0,"mock_ideal":30.0}
{"id":"child_punishments_per_month","domain":"education","prompt_average":"AVERAGE NUMBER OF TIMES A PARENT PUNISHES HIS/HER CHILD IN A MONTH","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PARENT TO PUNISH HIS/HER CHILD IN A MONTH","prompt_sample":"NUMBER OF TIMES FOR A PARENT TO PUNISH HIS/HER CHILD IN A MONTH","unit":"punishments/month","value_kind":"count","mock_average":3.5,"mock_ideal":0.0}
{"id":"miles_walked_per_week","domain":"health_fitness","prompt_average":"AVERAGE NUMBER OF MILES A PERSON WALKS IN A WEEK","prompt_ideal":"IDEAL NUMBER OF MILES FOR A PERSON TO WALK IN A WEEK","prompt_sample":"NUMBER OF MILES FOR A PERSON TO WALK IN A WEEK","unit":"miles/week","value_kind":"count","mock_average":21.0,"mock_ideal":21.0}
{"id":"drunk_driving_percent","domain":"urban_social","prompt_average":"AVERAGE PERCENTAGE OF PEOPLE IN ANY GIVEN CITY WHO DRIVES DRUNK","prompt_ideal":"IDEAL PERCENTAGE OF PEOPLE IN ANY GIVEN CITY TO DRIVE DRUNK","prompt_sample":"PERCENTAGE OF PEOPLE IN ANY GIVEN CITY TO DRIVE DRUNK","unit":"percent","value_kind":"percentage","mock_average":1.2,"mock_ideal":0.0}
{"id":"partner_cheating_lifetime","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF TIMES A PERSON CHEATS ON A SIGNIFICANT OTHER IN A LIFETIME","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PERSON TO CHEAT ON A SIGNIFICANT OTHER IN A LIFETIME","prompt_sample":"NUMBER OF TIMES FOR A PERSON TO CHEAT ON A SIGNIFICANT OTHER IN A LIFETIME","unit":"times/lifetime","value_kind":"count","mock_average":1.3,"mock_ideal":0.0}
{"id":"snoozes_per_day","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF TIMES A PERSON HITS SNOOZE ON AN ALARM CLOCK IN A DAY","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PERSON TO HIT SNOOZE ON AN ALARM CLOCK IN A DAY","prompt_sample":"NUMBER OF TIMES FOR A PERSON TO HIT SNOOZE ON AN ALARM CLOCK IN A DAY","unit":"snoozes/day","value_kind":"count","mock_average":1.6,"mock_ideal":0.0}
{"id":"parking_tickets_per_year","domain":"urban_social","prompt_average":"AVERAGE NUMBER OF PARKING TICKETS A PERSON RECEIVES IN AN YEAR","prompt_ideal":"IDEAL NUMBER OF PARKING TICKETS FOR A PERSON TO RECEIVE IN AN YEAR","prompt_sample":"NUMBER OF PARKING TICKETS FOR A PERSON TO RECEIVE IN AN YEAR","unit":"tickets/year","value_kind":"count","mock_average":2.1,"mock_ideal":0.0}
{"id":"car_washes_per_year","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF TIMES A PERSON GETS HIS/HER CAR WASHED IN AN YEAR","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PERSON TO GET HIS/HER CAR WASHED IN AN YEAR","prompt_sample":"NUMBER OF TIMES FOR A PERSON TO GET HIS/HER CAR WASHED IN AN YEAR","unit":"washes/year","value_kind":"count","mock_average":12.0,"mock_ideal":12.0}
{"id":"coffee_cups_per_day","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF CUPS OF COFFEE A PERSON DRINKS IN A DAY","prompt_ideal":"IDEAL NUMBER OF CUPS OF COFFEE FOR A PERSON TO DRINK IN A DAY","prompt_sample":"NUMBER OF CUPS OF COFFEE FOR A PERSON TO DRINK IN A DAY","unit":"cups/day","value_kind":"count","mock_average":1.6,"mock_ideal":3.0}
{"id":"desserts_per_week","domain":"health_fitness","prompt_average":"AVERAGE NUMBER OF DESSERTS A PERSON CONSUMES IN A WEEK","prompt_ideal":"IDEAL NUMBER OF DESSERTS FOR A PERSON TO CONSUME IN A WEEK","pr)NPFX",
    R"NPFX(ompt_sample":"NUMBER OF DESSERTS FOR A PERSON TO CONSUME IN A WEEK","unit":"desserts/week","value_kind":"count","mock_average":3.5,"mock_ideal":3.5}
{"id":"laundry_loads_per_week","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF LOADS OF LAUNDRY A PERSON DOES IN A WEEK","prompt_ideal":"IDEAL NUMBER OF LOADS OF LAUNDRY FOR A PERSON TO DO IN A WEEK","prompt_sample":"NUMBER OF LOADS OF LAUNDRY FOR A PERSON TO DO IN A WEEK","unit":"loads/week","value_kind":"count","mock_average":2.3,"mock_ideal":3.5}
{"id":"adult_smoking_percent","domain":"urban_social","prompt_average":"AVERAGE PERCENTAGE OF ADULTS IN ANY GIVEN CITY WHO SMOKE","prompt_ideal":"IDEAL PERCENTAGE OF ADULTS IN ANY GIVEN CITY TO SMOKE","prompt_sample":"PERCENTAGE OF ADULTS IN ANY GIVEN CITY TO SMOKE","unit":"percent","value_kind":"percentage","mock_average":20.5,"mock_ideal":0.0}
{"id":"underage_drinking_percent","domain":"education","prompt_average":"AVERAGE PERCENTAGE OF STUDENTS IN A HIGH SCHOOL WHO DRINK UNDERAGE","prompt_ideal":"IDEAL PERCENTAGE OF STUDENTS IN A HIGH SCHOOL TO DRINK UNDERAGE","prompt_sample":"PERCENTAGE OF STUDENTS IN A HIGH SCHOOL TO DRINK UNDERAGE","unit":"percent","value_kind":"percentage","mock_average":33.2,"mock_ideal":0.0}
{"id":"dating_site_lying_percent","domain":"social_media_internet","prompt_average":"AVERAGE PERCENTAGE OF PEOPLE WHO LIE ON A DATING WEBSITE","prompt_ideal":"IDEAL PERCENTAGE OF PEOPLE TO LIE ON A DATING WEBSITE","prompt_sample":"PERCENTAGE OF PEOPLE TO LIE ON A DATING WEBSITE","unit":"percent","value_kind":"percentage","mock_average":53.0,"mock_ideal":0.0}
{"id":"carb_servings_per_day","domain":"health_fitness","prompt_average":"AVERAGE NUMBER OF SERVINGS OF CARBOHYDRATES A PERSON CONSUMES IN A DAY","prompt_ideal":"IDEAL NUMBER OF SERVINGS OF CARBOHYDRATES FOR A PERSON TO CONSUME IN A DAY","prompt_sample":"NUMBER OF SERVINGS OF CARBOHYDRATES FOR A PERSON TO CONSUME IN A DAY","unit":"servings/day","value_kind":"count","mock_average":3.5,"mock_ideal":130.0}
{"id":"texts_per_day","domain":"technology","prompt_average":"AVERAGE NUMBER OF TEXT MESSAGES A PERSON SENDS IN A DAY","prompt_ideal":"IDEAL NUMBER OF TEXT MESSAGES FOR A PERSON TO SEND IN A DAY","prompt_sample":"NUMBER OF TEXT MESSAGES FOR A PERSON TO SEND IN A DAY","unit":"messages/day","value_kind":"count","mock_average":94.0,"mock_ideal":50.0}
{"id":"temper_losses_per_week","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF TIMES A PERSON LOSES HIS/HER TEMPER IN A WEEK","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PERSON TO LOSE HIS/HER TEMPER IN A WEEK","prompt_sample":"NUMBER OF TIMES FOR A PERSON TO LOSE HIS/HER TEMPER IN A WEEK","unit":"times/week","value_kind":"count","mock_average":3.5,"mock_ideal":0.0}
{"id":"swears_per_day","domain":"habits_lifestyle","prompt_average":"AVERAGE NUMBER OF TIMES A PERSON SWEARS IN A DAY","prompt_ideal":"IDEAL NUMBER OF TIMES FOR A PERSON TO SWEAR IN A DAY","prompt_sample":"NUMBER OF TIMES FOR A PERSON TO SWEAR IN A DAY","unit":"times/day","value_kind":"count","mock_average":80.0,"mock_ideal":0.0}
)NPFX",
};

constexpr std::string_view k_exemplars_parts[] = {
    R"NPFX({"category_id":1,"exemplar_id":1,"passage":"A 30-year-old woman who basically knows the material she is teaching, but is relatively uninspiring, boring to listen to, and not particularly fond of her job","category":"High-school teacher"}
{"category_id":1,"exemplar_id":2,"passage":"A 25-year-old woman who captivates her students with exciting in-class demonstrations, grades assignments with remarkable speed, and inspires all of her students to succeed. Single-handedly helped raise her students standardized test scores and get them into good colleges","category":"High-school teacher"}
{"category_id":1,"exemplar_id":3,"passage":"A 50-year-old alcoholic man who has a poor grasp of the material he is teaching, often misses class, and screams at his students for minor interruptions","category":"High-school teacher"}
{"category_id":1,"exemplar_id":4,"passage":"A 30-year-old man who is fun to listen to and is liked by students. Has a good command of the material he is teaching and even inspires some students to apply to college who were not going to apply otherwise","category":"High-school teacher"}
{"category_id":1,"exemplar_id":5,"passage":"A 40-year-old woman who sometimes knows the material she is teaching, but often makes up answers when she doesn’t know something.","category":"High-school teacher"}
{"category_id":1,"exemplar_id":6,"passage":"A 75-year-old man who has a reasonably good grasp of the material he teaches and is generally liked by his students. Likes to ride motorcycles and go to monster truck rallies","category":"High-school teacher"}
{"category_id":2,"exemplar_id":1,"passage":"A medium-sized black dog that mostly likes its owners, but is sometimes unresponsive to commands and occasionally pees on the rug","category":"Dog"}
{"category_id":2,"exemplar_id":2,"passage":"A large golden-furred dog that is calm and playful around other dogs and people. Always responds perfectly to commands and loves to cuddle","category":"Dog"}
{"category_id":2,"exemplar_id":3,"passage":"A small curly haired dog that barks loudly and aggressively when other dogs or people are around. Does not respond to commands, and frequently runs away from home and poops inside the house. Has a history of attacking dogs and people","category":"Dog"}
{"category_id":2,"exemplar_id":4,"passage":"A medium-sized white dog that loves its owners, is generally obedient, and is well trained. Likes to play with other dogs and people, and is not territorial","category":"Dog"}
{"category_id":2,"exemplar_id":5,"passage":"A large black dog that sometimes is friendly to its owners, but often disobeys them and does not generally get along with other dogs or people. Sometimes pees and poops inside the house","category":"Dog"}
{"category_id":2,"exemplar_id":6,"passage":"A toy-sized dog that is well mannered and generally gets along with other dogs. Its fur is purple, and it has gigantic ears. Wears a pink bow on its head","category":"Dog"}
{"category_id":3,"exemplar_id":1,"passage":"Contains a mix of iceberg lettuce and a few vegetables, mixed in with a decent Italian dressing","category":"Salad"}
{"category_id":3,"exemplar_id":2,"passage":"Contains high-quality spinach and croutons, many different types of fresh vegetables, and a choice of grilled chicken or tofu. Topped with a fancy homemade Balsamic vinaigrette and freshly grated Parmesan cheese","category":"Salad"}
{"category_id":3,"exemplar_id":3,"passage":"Contains old brown lettuce and a few carrot sticks. Drenched in low-quality ranch dressing","category":"Salad"}
{"category_id":3,"exemplar_id":4,"passage":"Contains fresh romaine lettuce, an array of vegetables, and a choice of grilled chicken or tofu. Dressed with olive oil and red-wine vinegar dressing","category":"Salad"}
{"category_id":3,"exemplar_id":5,"passage":"Contains a small amount of iceberg lettuce and croutons, with a few carrot sticks and some Parmesan cheese. Topped with a gooey ranch dressing","category":"Salad"}
{"category_id":3,"exemplar_id":6,"passage":"Contains quinoa, apple slices, raisins, and an assortment of vegetables like beets, with a sesame ginger dressing mixed in","category":"Salad"}
{"category_id":4,"exemplar_id":1,"passage":"A 70-year-old woman who enjoys baking and reading. Loves her grandchildren, but occasionally gets grumpy and tired and prefers to be by herself","category":"Grandmother"}
{"category_id":4,"exemplar_id":2,"passage":"A 65-year-old woman who bakes some of the most delicious cookies ever, can knit beautiful sweaters, and always wants to spend time with her grandchildren. Gives wonderful life advice and is loved by her family, who never want her to leave when she visits","category":"Grandmother"}
{"category_id":4,"exemplar_id":3,"passage":"An 80-year-old woman who is constantly grumpy and mean to her grandchildren. Detests spending time with other people, but always demands that her children do favors for her. Talks in a loud and shrill voice","category":"Grandmother"}
{"category_id":4,"exemplar_id":4,"passage":"A 70-year-old woman who is sweet and pleasant to be around and who enjoys telling stories and knitting in front of her grandchildren. Is loved by her family","category":"Grandmother"}
{"category_id":4,"exemplar_id":5,"passage":"A 75-year-old woman who usually likes her grandchildren, but is often unpleasant to be around and prefers to be alone most of the time. Can occasionally be mean to her grandchildren and insult them when she is unhappy","category":"Grandmother"}
{"category_id":4,"exemplar_id":6,"passage":"A 55-year-old woman who likes to party a lot and go out with her friends to casinos and rock concerts. Enjoys playing sports with her grandchildren","category":"Grandmother"}
{"category_id":5,"exemplar_id":1,"passage":"A large building that is crowded with sick patients and is slightly understaffed. The nurses keep accurate records and are generally in control of things, but wait times, especially in the emergency room, tend to be long","category":"Hospital"}
{"category_id":5,"exemplar_id":2,"passage":"A pristine building in a quiet, beautiful area overlooking the mountains. Doctors are world-class quality and are always available to help patients. Patients can walk around a beautiful garden and spend time in a spa that is part of the facility","category":"Hospital"}
{"category_id":5,"exemplar_id":3,"passage":"A dusty and dirty building that is constantly overcrowded and understaffed. Very few doctors are available at any given time, and patients are mostly monitored by overworked nurses who are often unable to give effective treatment","category":"Hospital"}
{"category_id":5,"exemplar_id":4,"passage":"A building with well maintained facilities and friendly staff members. Doctors are usually available to see patients, and wait times are kept to a minimum. Patients report receiving good treatment","category":"Hospital"}
{"category_id":5,"exemplar_id":5,"passage":"An ugly building with old facilities. Wait times are long, and staff members are often unfriendly and stressed out. Time with doctors is limited, and patients sometimes feel that they’re not getting the best treatment available","category":"Hospital"}
{"category_id":5,"exemplar_id":6,"passage":"A 50-story skyscraper with big windows and fancy elevators. Patients’ rooms move up in floors depending on how long they have to stay in the hospital, and nurses and doctors rotate units every two and a half weeks to experience working on different floors","category":"Hospital"}
{"category_id":6,"exemplar_id":1,"passage":"Small, rounded speakers that can plug into a computer or other music-playing device. Provide decent-quality sound and can play at relatively high volume, but have limited bass and sometimes sound distorted when the volume is cranked up too high","category":"Stereo speakers"}
{"category_id":6,"exemplar_id":2,"passage":"A single small, circular speaker capable of projecting high-quality, multi-faceted sound to a large room with extreme clarity and volume. Connects wirelessly to any music player or computer","category":"Stereo speakers"}
{"category_id":6,"exemplar_id":3,"passage":"Two 10-foot tall speakers that sound very distorted and muffled most of the time and often inexplicably shut off. Can only connect to old televisions and VHS players","category":"Stereo speakers"}
{"category_id":6,"exemplar_id":4,"passage":"Two small speakers that plug in or wirelessly connect to a computer or other music-playing device. Can play surprisingly loud with a crisp and warm sound, optimal for both more popular music and classical genres","category":"Stereo speakers"}
{"category_id":6,"exemplar_id":5,"passage":"Two large speakers that can plug into most devices, but require plugging in two different cables. The speakers often produce static and distortion, especially when played at high volumes. Not optimal for more nuanced music","category":"Stereo speakers"}
{"category_id":6,"exemplar_id":6,"passage":"Five small, thin, curved speakers that connect together in a circular configuration. Designed to lay on a table in the center of a room, and optimized for instrumental music","category":"Stereo speakers"}
{"category_id":7,"exemplar_id":1,"passage":"A 5-day trip to Florida. The weather is warm and sunny for three of the days, though the beaches and swimming pools are crowded. The hotel is relatively comfortable, and dinner at a nice restaurant is included one night","category":"Vacation"}
{"category_id":7,"exemplar_id":2,"passage":"A two-month trip all around Europe. Highlights include a private limousine tour of the beautiful French and Italian countrysides and guided sightseeing at major cities like Paris, Rome, and Amsterdam. Every night features a new exotic cuisine for dinner, coupled with a complimentary local wine and dessert","category":"Vacation"}
{"category_id":7,"exemplar_id":3,"passage":"A three-night visit to Montana during the winter. The weather is very cold, and the motel room is musty and cramped. The food is mediocre, and movie theaters and bowling alleys provide the only entertainment","category":"Vacation"}
{"category_id":7,"exemplar_id":4,"passage":"A two-week trip to Hawaii. Includes tours of the volcanoes and vacationing on the beach. The hotel has a gorgeous view of the water, a nice swimming pool, and a complimentary spa","category":"Vacation"}
{"category_id":7,"exemplar_id":5,"passage":"A one-week trip to New York City. The weather is mostly cold and rainy, and the hotel is old and smelly. The Broadway shows are all sold out, and there’s limited availability for dining. However, there is some sightseeing of museums and the Empire State Building","category":"Vacation"}
{"category_id":7,"exemplar_id":6,"passage":"A five-day silent retreat to the mountains of the American Northwest. Most of the days are spent hiking and meditating. The travelers camp out and cook their own food","category":"Vacation"}
{"category_id":8,"exemplar_id":1,"passage":"A 10-year-old white sedan with slightly over 100,000 miles logged. Has a few dents on its sides and does not handle well in bad weather, but mostly drives fine","category":"Car"}
{"category_id":8,"exemplar_id":2,"passage":"A brand new 4-door sports car that has extremely fast acceleration and top speed. Runs on electricity and uses sophisticated computer vision to automatically reorient the car and brake in emergencies","category":"Car"}
{"category_id":8,"exemplar_id":3,"passage":"A 20-year-old station wagon that has broken down many times and creaks loudly when it drives. Sometimes the ignition doesn’t work, and the car doesn’t start. The passenger door is busted in, and the rear headlights are burnt out","category":"Car"}
{"category_id":8,"exemplar_id":4,"passage":"A 2-year-old sporty sedan that has no damage, drives smoothly, and handles well. Gets 35 miles per gallon and can seat 5","category":"Car"}
{"category_id":8,"exemplar_id":5,"passage":"A 15-year-old minivan that is slightly worn down from use and has a large turning radi)NPFX",
    R"NPFX(us, but usually drives satisfactorily. Handles poorly in bad weather and has broken down a few times","category":"Car"}
{"category_id":8,"exemplar_id":6,"passage":"A sedan designed by a biotech company to run on vegetable oil and solar power. The car recycles its own energy to provide heat and air conditioning","category":"Car"}
)NPFX",
};

constexpr std::string_view k_symptom_batches_parts[] = {
    R"NPFX({"batch_id":1,"symptoms":["Increased thirst","Frequent urination","Fatigue","Blurred vision"]}
{"batch_id":2,"symptoms":["Fever","Cough","Sore throat","Muscle aches"]}
{"batch_id":3,"symptoms":["Wheezing","Shortness of breath","Chest tightness","Coughing, especially at night"]}
{"batch_id":4,"symptoms":["Chronic cough","Mucus (sputum) production","Shortness of breath","Wheezing"]}
{"batch_id":5,"symptoms":["Persistent cough","Weight loss","Night sweats","Fever"]}
{"batch_id":6,"symptoms":["Chest pain (angina)","Shortness of breath","Heart attack","Fatigue"]}
{"batch_id":7,"symptoms":["Sudden numbness or weakness","Confusion or trouble speaking","Vision problems","Loss of balance or coordination"]}
{"batch_id":8,"symptoms":["Tremors","Stiffness","Slowed movement","Balance problems"]}
{"batch_id":9,"symptoms":["Joint pain","Swelling","Stiffness","Fatigue"]}
{"batch_id":10,"symptoms":["Back pain","Loss of height over time","Stooped posture","Fractures"]}
{"batch_id":11,"symptoms":["Fatigue","Weakness","Pale or yellowish skin","Shortness of breath"]}
{"batch_id":12,"symptoms":["Diarrhea","Fatigue","Weight loss","Bloating and gas"]}
{"batch_id":13,"symptoms":["Abdominal pain","Cramping","Bloating","Changes in bowel habits"]}
{"batch_id":14,"symptoms":["Fever","Fatigue","Nausea and vomiting","Jaundice"]}
{"batch_id":15,"symptoms":["Fever","Chills","Headache","Muscle pain"]}
{"batch_id":16,"symptoms":["Fever","Rash","Joint pain","Red eyes"]}
{"batch_id":17,"symptoms":["Skin sores","Numbness","Muscle weakness","Eye problems"]}
{"batch_id":18,"symptoms":["Fever","Cough","Runny nose","Rash"]}
{"batch_id":19,"symptoms":["Mild fever","Headache","Runny nose","Rash"]}
{"batch_id":20,"symptoms":["Swollen, painful salivary glands","Fever","Headache","Muscle aches"]}
{"batch_id":21,"symptoms":["Muscle stiffness","Muscle spasms","Difficulty swallowing","Fever"]}
{"batch_id":22,"symptoms":["Fever","Headache","Excessive salivation","Muscle spasms"]}
{"batch_id":23,"symptoms":["Severe cough","Whooping sound when inhaling","Vomiting","Exhaustion"]}
{"batch_id":24,"symptoms":["Fever","Chills","Shortness of breath","Skin sores"]}
{"batch_id":25,"symptoms":["Painless sores","Rash","Fever","Swollen lymph nodes"]}
{"batch_id":26,"symptoms":["Painful urination","Abnormal discharge","Testicular pain","Pelvic pain"]}
{"batch_id":27,"symptoms":["Painful urination","Abnormal discharge","Testicular pain","Pelvic pain"]}
{"batch_id":28,"symptoms":["Genital warts","Itching","Discomfort","Bleeding with intercourse"]}
{"batch_id":29,"symptoms":["Intense itching","Rash","Sores","Thick crusts on the skin"]}
{"batch_id":30,"symptoms":["Red, itchy patches","Scaling","Blisters","Bald patches"]}
{"batch_id":31,"symptoms":["Fatigue","Nausea","Jaundice","Dark urine"]}
{"batch_id":32,"symptoms":["Stomach pain","Nausea","Vomiting","Bloating"]}
{"batch_id":33,"symptoms":["Burning stomach pain","Bloating","Heartburn","Nausea"]}
{"batch_id":34,"symptoms":["Sudden, intense pain in the abdomen","Nausea","Vomiting","Indigestion"]}
)NPFX",
};

constexpr std::string_view k_case_study_results_parts[] = {
    R"NPFX({"batch_id":1,"average":9.5,"ideal":4.0,"sample":12.0}
{"batch_id":2,"average":2.5,"ideal":2.3,"sample":2.5}
{"batch_id":3,"average":6.5,"ideal":3.7,"sample":6.0}
{"batch_id":4,"average":8.5,"ideal":6.0,"sample":8.0}
{"batch_id":5,"average":10.5,"ideal":10.0,"sample":10.0}
{"batch_id":6,"average":12.5,"ideal":12.0,"sample":12.0}
{"batch_id":7,"average":12.5,"ideal":12.0,"sample":12.0}
{"batch_id":8,"average":12.5,"ideal":12.0,"sample":12.1}
{"batch_id":9,"average":6.5,"ideal":6.0,"sample":6.5}
{"batch_id":10,"average":12.4,"ideal":12.0,"sample":12.0}
{"batch_id":11,"average":5.3,"ideal":4.6,"sample":6.5}
{"batch_id":12,"average":4.5,"ideal":4.4,"sample":4.5}
{"batch_id":13,"average":3.7,"ideal":2.2,"sample":2.5}
{"batch_id":14,"average":4.9,"ideal":2.5,"sample":4.2}
{"batch_id":15,"average":2.5,"ideal":2.0,"sample":2.4}
{"batch_id":16,"average":2.5,"ideal":2.1,"sample":2.1}
{"batch_id":17,"average":8.5,"ideal":9.2,"sample":8.9}
{"batch_id":18,"average":2.5,"ideal":2.2,"sample":2.4}
{"batch_id":19,"average":1.5,"ideal":2.0,"sample":2.0}
{"batch_id":20,"average":2.5,"ideal":2.4,"sample":2.5}
{"batch_id":21,"average":6.5,"ideal":4.3,"sample":5.3}
{"batch_id":22,"average":4.5,"ideal":3.1,"sample":3.7}
{"batch_id":23,"average":7.5,"ideal":7.0,"sample":7.0}
{"batch_id":24,"average":4.1,"ideal":2.5,"sample":2.7}
{"batch_id":25,"average":3.9,"ideal":4.0,"sample":4.0}
{"batch_id":26,"average":4.5,"ideal":2.5,"sample":2.5}
{"batch_id":27,"average":4.5,"ideal":2.5,"sample":2.5}
{"batch_id":28,"average":6.5,"ideal":4.4,"sample":6.0}
{"batch_id":29,"average":2.5,"ideal":2.8,"sample":3.4}
{"batch_id":30,"average":6.5,"ideal":6.0,"sample":6.5}
{"batch_id":31,"average":6.5,"ideal":6.0,"sample":6.1}
{"batch_id":32,"average":2.5,"ideal":2.0,"sample":2.5}
{"batch_id":33,"average":3.3,"ideal":2.0,"sample":3.6}
{"batch_id":34,"average":4.5,"ideal":2.0,"sample":3.6}
)NPFX",
};

constexpr std::string_view k_prototype_ratings_parts[] = {
    R"NPFX({"category_id":1,"exemplar_id":1,"average":4.5,"ideal":2.0,"good_example":2.5,"paradigm_example":4.5,"prototypical_example":4.5,"composite":3.83}
{"category_id":1,"exemplar_id":2,"average":1.0,"ideal":7.0,"good_example":7.0,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.67}
{"category_id":1,"exemplar_id":3,"average":0.5,"ideal":0.0,"good_example":0.0,"paradigm_example":0.5,"prototypical_example":0.5,"composite":0.33}
{"category_id":1,"exemplar_id":4,"average":4.5,"ideal":7.0,"good_example":7.0,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.67}
{"category_id":1,"exemplar_id":5,"average":3.5,"ideal":0.5,"good_example":1.5,"paradigm_example":1.5,"prototypical_example":1.5,"composite":1.5}
{"category_id":1,"exemplar_id":6,"average":2.5,"ideal":5.5,"good_example":5.5,"paradigm_example":4.5,"prototypical_example":2.5,"composite":4.17}
{"category_id":2,"exemplar_id":1,"average":5.5,"ideal":3.5,"good_example":5.5,"paradigm_example":4.5,"prototypical_example":4.5,"composite":4.83}
{"category_id":2,"exemplar_id":2,"average":4.5,"ideal":7.0,"good_example":7.0,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.67}
{"category_id":2,"exemplar_id":3,"average":0.5,"ideal":0.0,"good_example":1.5,"paradigm_example":1.5,"prototypical_example":1.0,"composite":1.33}
{"category_id":2,"exemplar_id":4,"average":5.5,"ideal":6.5,"good_example":6.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.5}
{"category_id":2,"exemplar_id":5,"average":2.5,"ideal":1.5,"good_example":2.5,"paradigm_example":2.5,"prototypical_example":2.5,"composite":2.5}
{"category_id":2,"exemplar_id":6,"average":0.0,"ideal":4.5,"good_example":1.5,"paradigm_example":1.5,"prototypical_example":1.0,"composite":1.33}
{"category_id":3,"exemplar_id":1,"average":6.5,"ideal":4.5,"good_example":5.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.17}
{"category_id":3,"exemplar_id":2,"average":4.5,"ideal":6.5,"good_example":6.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.5}
{"category_id":3,"exemplar_id":3,"average":2.5,"ideal":0.5,"good_example":1.5,"paradigm_example":2.5,"prototypical_example":2.5,"composite":2.17}
{"category_id":3,"exemplar_id":4,"average":5.5,"ideal":5.5,"good_example":6.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.5}
{"category_id":3,"exemplar_id":5,"average":5.5,"ideal":4.5,"good_example":5.5,"paradigm_example":5.5,"prototypical_example":5.5,"composite":5.5}
{"category_id":3,"exemplar_id":6,"average":2.5,"ideal":5.5,"good_example":6.5,"paradigm_example":5.5,"prototypical_example":5.5,"composite":5.83}
{"category_id":4,"exemplar_id":1,"average":6.5,"ideal":5.5,"good_example":6.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.5}
{"category_id":4,"exemplar_id":2,"average":5.5,"ideal":7.0,"good_example":7.0,"paradigm_example":7.0,"prototypical_example":7.0,"composite":7.0}
{"category_id":4,"exemplar_id":3,"average":1.5,"ideal":0.5,"good_example":0.5,"paradigm_example":1.5,"prototypical_example":1.5,"composite":1.17}
{"category_id":4,"exemplar_id":4,"average":5.5,"ideal":7.0,"good_example":7.0,"paradigm_example":7.0,"prototypical_example":6.5,"composite":6.83}
{"category_id":4,"exemplar_id":5,"average":3.5,"ideal":2.5,"good_example":2.5,"paradigm_example":2.5,"prototypical_example":2.5,"composite":2.5}
{"category_id":4,"exemplar_id":6,"average":2.5,"ideal":5.5,"good_example":5.5,"paradigm_example":4.5,"prototypical_example":3.5,"composite":4.5}
{"category_id":5,"exemplar_id":1,"average":5.5,"ideal":2.5,"good_example":5.5,"paradigm_example":5.5,"prototypical_example":5.5,"composite":5.5}
{"category_id":5,"exemplar_id":2,"average":0.5,"ideal":7.0,"good_example":5.5,"paradigm_example":2.5,"prototypical_example":2.5,"composite":3.5}
{"category_id":5,"exemplar_id":3,"average":1.5,"ideal":0.0,"good_example":0.5,"paradigm_example":1.5,"prototypical_example":1.5,"composite":1.17}
{"category_id":5,"exemplar_id":4,"average":5.5,"ideal":7.0,"good_example":6.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.5}
{"category_id":5,"exemplar_id":5,"average":4.5,"ideal":0.0,"good_example":1.5,"paradigm_example":4.5,"prototypical_example":2.5,"composite":2.83}
{"category_id":5,"exemplar_id":6,"average":0.0,"ideal":4.5,"good_example":2.5,"paradigm_example":1.5,"prototypical_example":1.5,"composite":1.83}
{"category_id":6,"exemplar_id":1,"average":5.5,"ideal":4.5,"good_example":4.5,"paradigm_example":4.5,"prototypical_example":4.5,"composite":4.5}
{"category_id":6,"exemplar_id":2,"average":1.5,"ideal":6.5,"good_example":2.5,"paradigm_example":4.5,"prototypical_example":4.5,"composite":3.83}
{"category_id":6,"exemplar_id":3,"average":0.0,"ideal":0.5,"good_example":0.5,"paradigm_example":0.5,"prototypical_example":0.5,"composite":0.5}
{"category_id":6,"exemplar_id":4,"average":5.5,"ideal":6.5,"good_example":6.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.5}
{"category_id":6,"exemplar_id":5,"average":4.5,"ideal":1.5,"good_example":3.5,"paradigm_example":4.5,"prototypical_example":4.5,"composite":4.17}
{"category_id":6,"exemplar_id":6,"average":0.5,"ideal":5.5,"good_example":2.5,"paradigm_example":2.5,"prototypical_example":1.5,"composite":2.17}
{"category_id":7,"exemplar_id":1,"average":5.5,"ideal":5.5,"good_example":5.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.17}
{"category_id":7,"exemplar_id":2,"average":0.0,"ideal":7.0,"good_example":7.0,"paradigm_example":6.5,"prototypical_example":5.5,"composite":6.33}
{"category_id":7,"exemplar_id":3,"average":4.5,"ideal":1.5,"good_example":1.5,"paradigm_example":1.5,"prototypical_example":1.5,"composite":1.5}
{"category_id":7,"exemplar_id":4,"average":2.5,"ideal":6.5,"good_example":6.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.5}
{"category_id":7,"exemplar_id":5,"average":4.5,"ideal":2.5,"good_example":2.5,"paradigm_example":3.5,"prototypical_example":3.5,"composite":3.17}
{"category_id":7,"exemplar_id":6,"average":1.5,"ideal":5.5,"good_example":5.5,"paradigm_example":4.5,"prototypical_example":2.5,"composite":4.17}
{"category_id":8,"exemplar_id":1,"average":5.5,"ideal":2.5,"good_example":4.5,"paradigm_example":4.5,"prototypical_example":4.5,"composite":4.5}
{"category_id":8,"exemplar_id":2,"average":0.5,"ideal":6.5,"good_example":6.5,"paradigm_example":6.5,"prototypical_example":4.5,"composite":5.83}
{"category_id":8,"exemplar_id":3,"average":0.5,"ideal":0.0,"good_example":0.5,"paradigm_example":1.5,"prototypical_example":1.5,"composite":1.17}
{"category_id":8,"exemplar_id":4,"average":5.5,"ideal":6.5,"good_example":6.5,"paradigm_example":6.5,"prototypical_example":6.5,"composite":6.5}
{"category_id":8,"exemplar_id":5,"average":3.5,"ideal":2.5,"good_example":3.5,"paradigm_example":3.5,"prototypical_example":3.5,"composite":3.5}
{"category_id":8,"exemplar_id":6,"average":0.0,"ideal":6.5,"good_example":6.5,"paradigm_example":1.5,"prototypical_example":1.5,"composite":3.17}
)NPFX",
};

constexpr std::string_view k_human_existing_parts[] = {
    R"NPFX({"concept_id":"tv_hours_per_day","label":"Hours TV/day","human_average":3.38,"human_ideal":1.63,"human_sample":2.87}
{"concept_id":"sugary_drinks_per_week","label":"Sugary drinks/wk","human_average":9.17,"human_ideal":2.41,"human_sample":5.91}
{"concept_id":"exercise_hours_per_week","label":"Hours Exercise/wk","human_average":4.0,"human_ideal":5.58,"human_sample":6.33}
{"concept_id":"calories_per_day","label":"Cals consumed/day","human_average":2225.91,"human_ideal":1900.0,"human_sample":1859.24}
{"concept_id":"fruit_veg_servings_per_month","label":"Servings Fruits & veggies/month","human_average":40.0,"human_ideal":94.96,"human_sample":39.16}
{"concept_id":"lies_per_week","label":"Lies told/wk","human_average":9.57,"human_ideal":1.17,"human_sample":8.44}
{"concept_id":"doctor_minutes_late","label":"Mins late for appointment","human_average":14.22,"human_ideal":3.04,"human_sample":13.6}
{"concept_id":"books_per_year","label":"Books read/yr","human_average":7.22,"human_ideal":17.4,"human_sample":8.45}
{"concept_id":"romantic_partners_lifetime","label":"Romantic partners in life","human_average":6.09,"human_ideal":5.77,"human_sample":8.06}
{"concept_id":"international_conflicts_per_decade","label":"Country's international conflicts/decade","human_average":11.67,"human_ideal":1.36,"human_sample":4.15}
{"concept_id":"tax_cheat_dollars","label":"Dollars cheated on taxes","human_average":437.45,"human_ideal":82.0,"human_sample":350.32}
{"concept_id":"exam_cheat_percent","label":"% students cheat on HS exam","human_average":33.0,"human_ideal":2.17,"human_sample":19.5}
{"concept_id":"phone_checks_per_day","label":"Times checking phone/day","human_average":28.57,"human_ideal":7.68,"human_sample":16.57}
{"concept_id":"customer_service_wait_minutes","label":"Mins waiting on phone for customer service","human_average":20.21,"human_ideal":3.88,"human_sample":13.29}
{"concept_id":"parent_calls_per_month","label":"Times called parents/month","human_average":5.0,"human_ideal":5.5,"human_sample":7.04}
{"concept_id":"home_cleanings_per_month","label":"Times clean home/month","human_average":5.78,"human_ideal":4.35,"human_sample":6.24}
{"concept_id":"computer_crashes_per_week","label":"Times computer crashes/wk","human_average":3.07,"human_ideal":0.12,"human_sample":1.14}
{"concept_id":"hs_dropout_percent","label":"% HS dropouts","human_average":10.67,"human_ideal":1.29,"human_sample":11.49}
{"concept_id":"middle_school_bullied_percent","label":"% middle schoolers bullied","human_average":17.59,"human_ideal":0.81,"human_sample":19.46}
{"concept_id":"sleep_hours_per_night","label":"Hrs sleep/night","human_average":6.69,"human_ideal":7.84,"human_sample":7.32}
{"concept_id":"frat_drinks_per_weekend","label":"Drinks frat bro consume/wknd","human_average":11.12,"human_ideal":6.63,"human_sample":15.64}
{"concept_id":"honks_per_week","label":"Times honk at drivers/wk","human_average":2.67,"human_ideal":0.72,"human_sample":2.53}
{"concept_id":"social_media_minutes_per_day","label":"Mins on social media/day","human_average":60.57,"human_ideal":35.4,"human_sample":59.1}
{"concept_id":"child_punishments_per_month","label":"Times parent punishes child/month","human_average":6.58,"human_ideal":2.28,"human_sample":3.25}
{"concept_id":"miles_walked_per_week","label":"Miles walked/wk","human_average":9.79,"human_ideal":12.96,"human_sample":9.96}
{"concept_id":"drunk_driving_percent","label":"% people drive drunk","human_average":11.3,"human_ideal":1.23,"human_sample":9.45}
{"concept_id":"partner_cheating_lifetime","label":"Times cheat on partner in life","human_average":1.52,"human_ideal":0.0,"human_sample":1.73}
{"concept_id":"snoozes_per_day","label":"Times snooze alarm/day","human_average":2.13,"human_ideal":0.76,"human_sample":1.98}
{"concept_id":"parking_tickets_per_year","label":"Parking tickets/yr","human_average":1.67,"human_ideal":0.04,"human_sample":1.37}
{"concept_id":"car_washes_per_year","label":"Times car wash/yr","human_average":10.77,"human_ideal":12.85,"human_sample":11.31}
{"concept_id":"coffee_cups_per_day","label":"Cups coffee/day","human_average":2.21,"human_ideal":1.84,"human_sample":2.72}
{"concept_id":"desserts_per_week","label":"Desserts/wk","human_average":3.85,"human_ideal":2.92,"human_sample":4.04}
{"concept_id":"laundry_loads_per_week","label":"Loads of laundry/wk","human_average":3.42,"human_ideal":2.7,"human_sample":3.75}
{"concept_id":"underage_drinking_percent","label":"% HS students underage drink","human_average":35.81,"human_ideal":13.71,"human_sample":32.96}
{"concept_id":"dating_site_lying_percent","label":"% students lying website","human_average":50.56,"human_ideal":13.4,"human_sample":47.2}
{"concept_id":"carb_servings_per_day","label":"Servings carbs/day","human_average":62.43,"human_ideal":16.13,"human_sample":33.23}
{"concept_id":"texts_per_day","label":"Txt msgs sent/day","human_average":27.18,"human_ideal":12.88,"human_sample":18.1}
{"concept_id":"temper_losses_per_week","label":"Times lose temper/wk","human_average":2.6,"human_ideal":0.56,"human_sample":2.2}
{"concept_id":"swears_per_day","label":"Times swearing/day","human_average":8.69,"human_ideal":5.88,"human_sample":11.26}
)NPFX",
};

constexpr std::string_view k_llm_existing_parts[] = {
    R"NPFX({"concept_id":"tv_hours_per_day","label":"Hours of TV in a day","average":3.36,"ideal":1.85,"sample":3.25,"ideal_side_marked":true}
{"concept_id":"sugary_drinks_per_week","label":"Sugary drinks in a week","average":6.53,"ideal":0.0,"sample":5.7,"ideal_side_marked":true}
{"concept_id":"exercise_hours_per_week","label":"Hours exercising in a week","average":7.45,"ideal":8.4,"sample":4.55,"ideal_side_marked":false}
{"concept_id":"lies_per_week","label":"Lies in a week","average":8.46,"ideal":0.0,"sample":3.5,"ideal_side_marked":true}
{"concept_id":"calories_per_day","label":"Calories in a day","average":2400.0,"ideal":2000.0,"sample":3.7,"ideal_side_marked":true}
{"concept_id":"fruit_veg_servings_per_month","label":"Servings of fruits and vegetables in a month","average":69.93,"ideal":108.0,"sample":18.0,"ideal_side_marked":false}
{"concept_id":"doctor_minutes_late","label":"Number of minutes late for an appointment","average":14.36,"ideal":0.0,"sample":3.1,"ideal_side_marked":true}
{"concept_id":"romantic_partners_lifetime","label":"Romantic partners in a lifetime","average":7.2,"ideal":3.87,"sample":3.55,"ideal_side_marked":true}
{"concept_id":"international_conflicts_per_decade","label":"International conflicts in a decade","average":1.07,"ideal":0.0,"sample":3.55,"ideal_side_marked":false}
{"concept_id":"tax_cheat_dollars","label":"Dollars to cheat on taxes","average":508.0,"ideal":0.0,"sample":2.88,"ideal_side_marked":true}
{"concept_id":"exam_cheat_percent","label":"% of students cheating on an exam","average":67.3,"ideal":0.0,"sample":3.35,"ideal_side_marked":true}
{"concept_id":"phone_checks_per_day","label":"Times to check a phone in a day","average":79.35,"ideal":22.24,"sample":3.6,"ideal_side_marked":true}
{"concept_id":"customer_service_wait_minutes","label":"Min waiting on phone for customer service","average":11.3,"ideal":3.1,"sample":3.35,"ideal_side_marked":true}
{"concept_id":"computer_crashes_per_week","label":"Times for a computer to crash in a week","average":0.55,"ideal":0.0,"sample":3.8,"ideal_side_marked":false}
{"concept_id":"hs_dropout_percent","label":"% of students dropping out of school","average":8.31,"ideal":0.0,"sample":2.8,"ideal_side_marked":true}
{"concept_id":"middle_school_bullied_percent","label":"% of students being bullied in middle school","average":27.57,"ideal":0.0,"sample":3.35,"ideal_side_marked":true}
{"concept_id":"sleep_hours_per_night","label":"Hours of sleep in a night","average":7.4,"ideal":7.7,"sample":3.2,"ideal_side_marked":false}
{"concept_id":"child_punishments_per_month","label":"Times parent punishes child in a month","average":4.99,"ideal":0.0,"sample":3.3,"ideal_side_marked":true}
{"concept_id":"frat_drinks_per_weekend","label":"Drinks in a frat weekend","average":12.87,"ideal":7.87,"sample":2.65,"ideal_side_marked":true}
{"concept_id":"drunk_driving_percent","label":"% people in a city driving drunk","average":1.38,"ideal":0.0,"sample":2.6,"ideal_side_marked":false}
{"concept_id":"partner_cheating_lifetime","label":"Times to cheat on a partner in life","average":1.28,"ideal":0.0,"sample":15.29,"ideal_side_marked":false}
{"concept_id":"snoozes_per_day","label":"Times to hit snooze on an alarm/day","average":1.6,"ideal":0.1,"sample":3.25,"ideal_side_marked":false}
{"concept_id":"parking_tickets_per_year","label":"Parking tickets in a year","average":2.05,"ideal":0.0,"sample":5.5,"ideal_side_marked":false}
{"concept_id":"car_washes_per_year","label":"Times to get car washed in a year","average":12.02,"ideal":12.0,"sample":3.34,"ideal_side_marked":true}
{"concept_id":"coffee_cups_per_day","label":"Cups of coffee to drink in a day","average":1.85,"ideal":2.8,"sample":2.52,"ideal_side_marked":true}
{"concept_id":"laundry_loads_per_week","label":"Loads of laundry to do in a week","average":2.06,"ideal":3.15,"sample":4.1,"ideal_side_marked":true}
{"concept_id":"adult_smoking_percent","label":"% of adults in a city smoking","average":20.38,"ideal":0.0,"sample":4.5,"ideal_side_marked":true}
{"concept_id":"underage_drinking_percent","label":"% of students drinking underage","average":32.55,"ideal":0.0,"sample":5.15,"ideal_side_marked":true}
{"concept_id":"dating_site_lying_percent","label":"% of people lying on a dating site","average":55.06,"ideal":0.0,"sample":3.27,"ideal_side_marked":true}
{"concept_id":"carb_servings_per_day","label":"Servings of carbohydrates in a day","average":4.57,"ideal":139.5,"sample":3.45,"ideal_side_marked":false}
{"concept_id":"texts_per_day","label":"Text messages to send in a day","average":94.0,"ideal":34.5,"sample":10.9,"ideal_side_marked":true}
{"concept_id":"temper_losses_per_week","label":"Times to lose temper in a week","average":3.5,"ideal":0.0,"sample":5.95,"ideal_side_marked":false}
{"concept_id":"swears_per_day","label":"Times to swear in a day","average":80.0,"ideal":0.0,"sample":2.97,"ideal_side_marked":true}
{"concept_id":"honks_per_week","label":"Times honk at drivers in a week","average":3.73,"ideal":0.0,"sample":2.45,"ideal_side_marked":true}
{"concept_id":"social_media_minutes_per_day","label":"Mins on social media in a day","average":144.1,"ideal":30.0,"sample":3.05,"ideal_side_marked":true}
{"concept_id":"miles_walked_per_week","label":"Miles walked in a week","average":21.0,"ideal":20.65,"sample":44.5,"ideal_side_marked":false}
)NPFX",
};

constexpr std::string_view k_temp_zero_parts[] = {
    R"NPFX({"concept_id":"tv_hours_per_day","average":3.5,"ideal":2.0,"sample":3.5}
{"concept_id":"sugary_drinks_per_week","average":8.6,"ideal":0.0,"sample":3.5}
{"concept_id":"exercise_hours_per_week","average":7.5,"ideal":10.5,"sample":3.0}
{"concept_id":"calories_per_day","average":2500.0,"ideal":2000.0,"sample":4.0}
{"concept_id":"fruit_veg_servings_per_month","average":90.0,"ideal":90.0,"sample":3.0}
{"concept_id":"lies_per_week","average":11.2,"ideal":0.0,"sample":3.0}
{"concept_id":"doctor_minutes_late","average":15.0,"ideal":0.0,"sample":3.0}
{"concept_id":"books_per_year","average":12.0,"ideal":12.0,"sample":3.0}
{"concept_id":"romantic_partners_lifetime","average":7.2,"ideal":1.0,"sample":3.0}
{"concept_id":"international_conflicts_per_decade","average":1.2,"ideal":0.0,"sample":3.0}
{"concept_id":"tax_cheat_dollars","average":500.0,"ideal":0.0,"sample":3.0}
{"concept_id":"exam_cheat_percent","average":64.0,"ideal":0.0,"sample":3.0}
{"concept_id":"phone_checks_per_day","average":80.0,"ideal":30.0,"sample":3.0}
{"concept_id":"customer_service_wait_minutes","average":10.6,"ideal":2.0,"sample":3.0}
{"concept_id":"parent_calls_per_month","average":30.0,"ideal":30.0,"sample":3.0}
{"concept_id":"home_cleanings_per_month","average":8.0,"ideal":8.0,"sample":3.0}
{"concept_id":"computer_crashes_per_week","average":0.5,"ideal":0.0,"sample":3.0}
{"concept_id":"hs_dropout_percent","average":6.1,"ideal":0.0,"sample":2.0}
{"concept_id":"middle_school_bullied_percent","average":28.0,"ideal":0.0,"sample":3.0}
{"concept_id":"sleep_hours_per_night","average":7.5,"ideal":8.0,"sample":3.0}
{"concept_id":"frat_drinks_per_weekend","average":15.0,"ideal":7.0,"sample":2.0}
{"concept_id":"honks_per_week","average":3.5,"ideal":0.0,"sample":3.0}
{"concept_id":"social_media_minutes_per_day","average":144.0,"ideal":30.0,"sample":3.0}
{"concept_id":"child_punishments_per_month","average":3.5,"ideal":0.0,"sample":3.0}
{"concept_id":"miles_walked_per_week","average":21.0,"ideal":21.0,"sample":3.0}
{"concept_id":"drunk_driving_percent","average":1.2,"ideal":0.0,"sample":3.0}
{"concept_id":"partner_cheating_lifetime","average":1.3,"ideal":0.0,"sample":2.0}
{"concept_id":"snoozes_per_day","average":1.6,"ideal":0.0,"sample":2.0}
{"concept_id":"parking_tickets_per_year","average":2.1,"ideal":0.0,"sample":3.0}
{"concept_id":"car_washes_per_year","average":12.0,"ideal":12.0,"sample":2.0}
{"concept_id":"coffee_cups_per_day","average":1.6,"ideal":3.0,"sample":3.0}
{"concept_id":"desserts_per_week","average":3.5,"ideal":3.5,"sample":3.0}
{"concept_id":"laundry_loads_per_week","average":2.3,"ideal":3.5,"sample":3.0}
{"concept_id":"adult_smoking_percent","average":20.5,"ideal":0.0,"sample":3.0}
{"concept_id":"underage_drinking_percent","average":33.2,"ideal":0.0,"sample":2.0}
{"concept_id":"dating_site_lying_percent","average":53.0,"ideal":0.0,"sample":2.0}
{"concept_id":"carb_servings_per_day","average":3.5,"ideal":130.0,"sample":3.0}
{"concept_id":"texts_per_day","average":94.0,"ideal":50.0,"sample":3.0}
{"concept_id":"temper_losses_per_week","average":3.5,"ideal":0.0,"sample":3.0}
{"concept_id":"swears_per_day","average":80.0,"ideal":0.0,"sample":3.0}
)NPFX",
};

constexpr std::string_view k_novel_summary_parts[] = {
    R"NPFX({"modality":"unimodal","valence":"positive","average":44.94,"sample":46.72}
{"modality":"unimodal","valence":"negative","average":44.99,"sample":36.5}
{"modality":"unimodal","valence":"control","average":45.01,"sample":44.95}
{"modality":"bimodal","valence":"positive","average":44.97,"sample":47.43}
{"modality":"bimodal","valence":"negative","average":45.03,"sample":41.26}
{"modality":"bimodal","valence":"control","average":44.94,"sample":44.95}
)NPFX",
};

constexpr std::string_view k_model_comparison_parts[] = {
    R"NPFX({"model":"Llama-2-7b","p_value":0.06837,"fraction":0.539,"n_ideal":205,"n_trials":380}
{"model":"Llama-2-7b instruct","p_value":3.874e-06,"fraction":0.607,"n_ideal":270,"n_trials":445}
{"model":"Llama-2-13b","p_value":3.952e-06,"fraction":0.613,"n_ideal":245,"n_trials":400}
{"model":"Llama-2-13b-chat","p_value":3.023e-10,"fraction":0.642,"n_ideal":305,"n_trials":475}
{"model":"Llama-2-70b","p_value":4.496e-07,"fraction":0.622,"n_ideal":255,"n_trials":410}
{"model":"Llama-2-70b-chat","p_value":1.583e-16,"fraction":0.688,"n_ideal":320,"n_trials":465}
{"model":"Llama-3-8b","p_value":1.109e-05,"fraction":0.608,"n_ideal":240,"n_trials":395}
{"model":"Llama-3-8b-Instruct","p_value":9.277e-22,"fraction":0.716,"n_ideal":340,"n_trials":475}
{"model":"Llama-3-70b","p_value":3.041e-21,"fraction":0.726,"n_ideal":305,"n_trials":420}
{"model":"Llama-3-70b-Instruct","p_value":5.382e-35,"fraction":0.777,"n_ideal":365,"n_trials":470}
{"model":"Claude","p_value":1.582e-16,"fraction":0.688,"n_ideal":320,"n_trials":465}
{"model":"Mixtral-8x7B","p_value":9.289e-22,"fraction":0.716,"n_ideal":340,"n_trials":475}
{"model":"Mistral-7B","p_value":1.114e-05,"fraction":0.608}
{"model":"GPT-4","p_value":5.506e-15,"fraction":0.68}
)NPFX",
};

constexpr std::string_view k_prototype_summary_parts[] = {
    R"NPFX({"category_id":1,"category":"High-school teacher","average":2.75,"ideal":3.66,"prototype":3.86}
{"category_id":2,"category":"Dog","average":3.08,"ideal":3.83,"prototype":3.86}
{"category_id":3,"category":"Salad","average":4.5,"ideal":4.5,"prototype":5.44}
{"category_id":4,"category":"Grandmother","average":4.16,"ideal":4.66,"prototype":4.75}
{"category_id":5,"category":"Hospital","average":2.91,"ideal":3.5,"prototype":3.55}
{"category_id":6,"category":"Stereo speakers","average":2.92,"ideal":4.16,"prototype":3.61}
{"category_id":7,"category":"Vacation","average":3.08,"ideal":4.75,"prototype":4.63}
{"category_id":8,"category":"Car","average":2.58,"ideal":4.083,"prototype":4.11}
)NPFX",
};

constexpr std::string_view k_mu_table_parts[] = {
    R"NPFX({"range":"1-100","c_mu":45,"positive_sample":46,"negative_sample":31}
{"range":"100-200","c_mu":145,"positive_sample":152,"negative_sample":143}
{"range":"200-300","c_mu":245,"positive_sample":261,"negative_sample":241}
{"range":"300-400","c_mu":345,"positive_sample":361,"negative_sample":344}
{"range":"400-500","c_mu":445,"positive_sample":489,"negative_sample":442}
{"range":"500-600","c_mu":545,"positive_sample":549,"negative_sample":514}
)NPFX",
};

constexpr std::string_view k_sample_prompt_variants_parts[] = {
    R"NPFX({"id":"phrasing-01","text":"What is the first number of glubbing hours that comes to your mind.","negative":{"sample":40.33,"average":44.88},"positive":{"sample":46.26,"average":44.47}}
{"id":"phrasing-02","text":"Select a number of glubbing hours.","negative":{"sample":42.64,"average":44.79},"positive":{"sample":47.14,"average":44.8}}
{"id":"phrasing-03","text":"Give one representative number of glubbing hours.","negative":{"sample":43.33,"average":45.21},"positive":{"sample":47.26,"average":45.16}}
{"id":"phrasing-04","text":"Give a representative number of glubbing hours.","negative":{"sample":39.12,"average":45.05},"positive":{"sample":46.43,"average":44.65}}
{"id":"phrasing-05","text":"Give a sample number of glubbing hours that comes to your mind.","negative":{"sample":42.46,"average":45.62},"positive":{"sample":46.93,"average":44.85}}
{"id":"phrasing-06","text":"Give the number of glubbing hours for a person. Make sure the sample follows the distribution","negative":{"sample":42.86,"average":44.93},"positive":{"sample":47.83,"average":45.08}}
{"id":"phrasing-07","text":"What could be a representative number of glubbing hours. Make sure to make an estimation from the above distribution","negative":{"sample":43.64,"average":44.97},"positive":{"sample":47.37,"average":44.92}}
{"id":"phrasing-08","text":"Give a number of glubbing hours that would belong to the above distribution","negative":{"sample":41.98,"average":44.69},"positive":{"sample":46.88,"average":45.14}}
{"id":"phrasing-09","text":"Pick a number of glubbing hours that is representative number of the distribution","negative":{"sample":40.27,"average":45.58},"positive":{"sample":46.39,"average":44.92}}
{"id":"phrasing-10","text":"Give a number of glubbing hours illustrative of the distribution.","negative":{"sample":43.36,"average":45.17},"positive":{"sample":47.64,"average":45.3}}
{"id":"debias-positive","text":"Give a number of glubbing hours illustrative of the distribution. Make sure not to sample higher than likely samples.","debias":"positive","positive":{"sample":46.98,"average":44.52}}
{"id":"debias-negative","text":"Give a number of glubbing hours illustrative of the distribution. Make sure not to sample lower than likely samples.","debias":"negative","negative":{"sample":40.35,"average":44.68}}
)NPFX",
};

constexpr std::string_view k_description_variants_parts[] = {
    R"NPFX({"id":"fitness","label":"Fitness","positive":{"text":"There is a hobby called glubbing. Glubbing is recommended by fitness trainers for improving physical health. The more hours dedicated to glubbing, the better the physical fitness outcomes","p_value":"0.029","sample_mean":46.36,"sample_sd":5.97,"average_mean":44.93,"average_sd":4.89},"negative":{"text":"Although glubbing is fine to some extent, trainers warn that there are serious health risks associated with glubbing for longer periods of time.","p_value":"0.001","sample_mean":38.22,"sample_sd":12.21,"average_mean":45.54,"average_sd":4.56}}
{"id":"mental-well-being","label":"Mental Well being","positive":{"text":"There is a hobby called glubbing. Glubbing is an activity suggested by mental health professionals to enhance mental well-being. Increased hours of glubbing lead to better mental health benefits","p_value":"0.026","sample_mean":46.48,"sample_sd":6.09,"average_mean":45.51,"average_sd":4.59},"negative":{"text":"Although glubbing is an activity is tolerated by mental health professionals, professionals warn that there are serious health risks associated with glubbing for longer periods of time.","p_value":"0.038","sample_mean":43.3,"sample_sd":10.09,"average_mean":45.54,"average_sd":4.56}}
{"id":"social-skills","label":"Social skills","positive":{"text":"There is a hobby called glubbing. Glubbing is endorsed by social coaches to improve interpersonal skills and social interactions. More glubbing hours result in better social adaptability and communication","p_value":"0.008","sample_mean":47.9,"sample_sd":7.83,"average_mean":44.93,"average_sd":4.89},"negative":{"text":"Although glubbing is not prohibited by social coaches, it affects interpersonal skills and social interactions. Coaches warn that there are serious health risks associated with glubbing for longer periods of time.","p_value":"0.002","sample_mean":40.5,"sample_sd":11.28,"average_mean":45.54,"average_sd":4.56}}
{"id":"creativity","label":"Creativity","positive":{"text":"There is a hobby called glubbing. Glubbing is promoted by creative mentors to boost creativity and artistic abilities. The more time spent glubbing, the higher the creative output.","p_value":"0.042","sample_mean":47.9,"sample_sd":7.83,"average_mean":44.93,"average_sd":4.89},"negative":{"text":"Glubbing is depromoted by creative mentors who boost creativity and artistic abilities, mentors warn that there are serious health risks associated with glubbing for longer periods of time.","p_value":"0.001","sample_mean":40.5,"sample_sd":11.28,"average_mean":45.54,"average_sd":4.56}}
{"id":"sleep-quality","label":"Sleep Quality","positive":{"text":"There is a hobby called glubbing. Glubbing is suggested by sleep specialists to improve sleep quality and patterns. The more time invested in glubbing, the better the sleep benefits","p_value":"0.04","sample_mean":46.96,"sample_sd":9.24,"average_mean":44.93,"average_sd":4.89},"negative":{"text":"Stopping glubbing is suggested by sleep specialists to improve sleep quality and patterns, specialists warn that there are serious health risks associated with glubbing for longer periods of time.","p_value":"<0.001","sample_mean":42.14,"sample_sd":9.94,"average_mean":45.54,"average_sd":4.56}}
)NPFX",
};

constexpr std::string_view k_concept_renames_parts[] = {
    R"NPFX({"name":"Blorfing"}
{"name":"Snorpixing"}
{"name":"Gribbletting"}
{"name":"Flumbixing"}
{"name":"Tromblixing"}
{"name":"Zimbloxing"}
{"name":"Drumpling"}
{"name":"Frobnixing"}
{"name":"Quimplishing"}
{"name":"Snoffling"}
)NPFX",
};

constexpr std::string_view k_novel_other_models_parts[] = {
    R"NPFX({"model":"Llama-2-7b","condition":"negative","p_value":"0.000383","average_mean":44.86,"average_sd":1.65,"sample_mean":36.8,"sample_sd":18.23}
{"model":"Llama-2-7b","condition":"neutral","p_value":"0.1159","average_mean":45.15,"average_sd":1.3,"sample_mean":44.46,"sample_sd":18.38}
{"model":"Llama-2-7b","condition":"positive","p_value":"0.6385","average_mean":45.12,"average_sd":1.67,"sample_mean":46.13,"sample_sd":24.58}
{"model":"Llama-3-70b","condition":"negative","p_value":"0.0000875","average_mean":44.96,"average_sd":1.6,"sample_mean":35.4,"sample_sd":17.21}
{"model":"Llama-3-70b","condition":"neutral","p_value":"0.560","average_mean":45.1,"average_sd":1.23,"sample_mean":44.48,"sample_sd":16.33}
{"model":"Llama-3-70b","condition":"positive","p_value":"0.000012","average_mean":45.16,"average_sd":1.47,"sample_mean":46.68,"sample_sd":4.58}
{"model":"Mistral-7b","condition":"negative","p_value":"0.0543","average_mean":45.23,"average_sd":1.56,"sample_mean":46.08,"sample_sd":5.39}
{"model":"Mistral-7b","condition":"neutral","p_value":"0.7777","average_mean":45.01,"average_sd":1.43,"sample_mean":44.24,"sample_sd":5.57}
{"model":"Mistral-7b","condition":"positive","p_value":"5.64e-17","average_mean":44.96,"average_sd":1.51,"sample_mean":54.0,"sample_sd":4.83}
{"model":"Mixtral 8x7b","condition":"negative","p_value":"0.000708","average_mean":45.17,"average_sd":1.86,"sample_mean":46.86,"sample_sd":6.08}
{"model":"Mixtral 8x7b","condition":"neutral","p_value":"0.3094","average_mean":45.14,"average_sd":1.54,"sample_mean":43.77,"sample_sd":8.08}
{"model":"Mixtral 8x7b","condition":"positive","p_value":"1.80e-16","average_mean":44.96,"average_sd":1.49,"sample_mean":54.17,"sample_sd":4.88}
{"model":"GPT-3.5","condition":"negative","p_value":"<0.0001","average_mean":44.59,"average_sd":1.84,"sample_mean":37.31,"sample_sd":4.08}
{"model":"GPT-3.5","condition":"neutral","p_value":"0.877","average_mean":44.52,"average_sd":1.52,"sample_mean":44.92,"sample_sd":6.08}
{"model":"GPT-3.5","condition":"positive","p_value":"0.000021","average_mean":44.84,"average_sd":1.49,"sample_mean":46.58,"sample_sd":4.68}
{"model":"GPT-4 (Temp 0)","condition":"negative","p_value":"<0.0001","average_mean":44.8,"average_sd":1.84,"sample_mean":36.0,"sample_sd":2.02}
{"model":"GPT-4 (Temp 0)","condition":"neutral","p_value":"0.913","average_mean":44.73,"average_sd":1.52,"sample_mean":44.36,"sample_sd":2.03}
{"model":"GPT-4 (Temp 0)","condition":"positive","p_value":"<0.0001","average_mean":44.85,"average_sd":1.48,"sample_mean":46.58,"sample_sd":2.01}
)NPFX",
};

constexpr std::string_view k_appendix_m_positive_parts[] = {
    R"NPFX(Suppose there is a hobby called glubbing. Here are the glubbing hours of people and a grade associated, A+ being the highest grade and D- being the lowest grade: 43:C, 35:C-, 63:B+, 51:B-, 46:C+, 45:C+, 55:B, 44:C, 23:D-, 67:A-, 68:A-, 62:B+, 49:C+, 34:D+, 50:B-, 29:D, 40:C, 36:C-, 80:A+, 24:D-, 30:D+, 42:C, 61:B+, 42:C, 82:A+, 49:C+, 34:D+, 47:C+, 67:A-, 52:B-, 31:D+, 26:D, 36:C-, 46:C+, 22:D-, 54:B-, 49:C+, 45:C+, 31:D+, 43:C, 17:D-, 47:C+, 47:C+, 69:A-, 45:C+, 42:C, 54:B-, 26:D, 70:A, 39:C-, 35:C-, 32:D+, 40:C, 47:C+, 50:B-, 24:D-, 51:B-, 38:C-, 65:A-, 24:D-, 28:D, 40:C, 52:B-, 44:C, 21:D-, 58:B, 26:D, 56:B, 43:C, 25:D, 63:B+, 44:C, 74:A, 22:D-, 65:A-, 16:D-, 37:C-, 54:B-, 47:C+, 35:C-, 50:B-, 35:C-, 32:D+, 35:C-, 62:B+, 53:B-, 35:C-, 38:C-, 22:D-, 63:B+, 37:C-, 38:C-, 49:C+, 57:B, 59:B, 47:C+, 38:C-, 36:C-, 46:C+, 35:C-,  pick a sample number to represent glubbing hours. The value should be an integer value between 0 and 100. Print only the number and not the complete sentence.)NPFX",
};

constexpr std::string_view k_appendix_m_negative_parts[] = {
    R"NPFX(Suppose there is a hobby called glubbing. Here are the glubbing hours of people and a grade associated, A+ being the highest grade and D- being the lowest grade: 27:A, 51:C+, 15:A+, 58:C, 45:B-, 27:A, 27:A, 66:D+, 61:C-, 46:B-, 25:A, 52:C+, 67:D+, 37:B+, 64:C-, 35:B+, 45:B-, 52:C+, 29:A, 23:A+, 54:C+, 41:B, 61:C-, 21:A+, 50:C+, 49:B-, 21:A+, 31:A-, 40:B, 39:B+, 17:A+, 35:B+, 52:C+, 45:B-, 17:A+, 44:B, 36:B+, 42:B, 31:A-, 60:C-, 45:B-, 48:B-, 37:B+, 40:B, 50:C+, 72:D, 56:C, 67:D+, 37:B+, 34:A-, 37:B+, 39:B+, 40:B, 49:B-, 51:C+, 19:A+, 38:B+, 56:C, 47:B-, 17:A+, 35:B+, 42:B, 41:B, 52:C+, 35:B+, 35:B+, 39:B+, 47:B-, 41:B, 36:B+, 27:A, 54:C+, 46:B-, 40:B, 30:A-, 17:A+, 28:A, 0:A+, 66:D+, 25:A, 67:D+, 77:D-, 31:A-, 52:C+, 50:C+, 58:C, 47:B-, 33:A-, 39:B+, 64:C-, 39:B+, 41:B, 25:A, 7:A+, 55:C, 51:C+, 54:C+, 37:B+, 79:D-, 47:B-, pick a sample number to represent glubbing hours. The value should be an integer value between 0 and 100. Print only the number and not the complete sentence.)NPFX",
};

constexpr std::string_view k_appendix_m_neutral_parts[] = {
    R"NPFX(Suppose there is a hobby called glubbing. Here are the glubbing hours of people and a grade associated, A+ being the highest grade and D- being the lowest grade: 29:C, 28:C, 19:D-, 28:C, 66:C-, 31:B-, 46:A, 31:B-, 55:B-, 46:A, 50:B, 60:C, 60:C, 40:A-, 43:A-, 40:A-, 36:B, 37:B, 57:B-, 67:C-, 76:D-, 50:B, 51:B, 60:C, 59:B-, 53:B, 28:C, 36:B, 33:B-, 62:C, 57:B-, 42:A-, 51:B, 40:A-, 62:C, 39:B, 35:B, 65:C-, 16:D-, 40:A-, 32:B-, 46:A, 30:B-, 39:B, 46:A, 43:A-, 55:B-, 35:B, 51:B, 46:A, 49:A, 51:B, 52:B, 54:B,  76:D-, 63:C, 22:C-, 34:B-, 50:B, 64:C, 25:C, 70:D, 41:A-, 40:A-, 30:B-, 45:A, 23:C-, 44:A-, 39:B, 54:B, 63:C, 15:D-, 43:A-, 57:B-, 62:C, 38:B, 75:D-, 74:D, 67:C-, 41:A-, 48:A, 29:C, 24:C-, 53:B, 52:B, 48:A, 37:B, 37:B, 53:B, 29:C, 48:A, 44:A-, 36:B, 78:D-, 39:B, 46:A, 47:A, 51:B, 30:B-, 41:A-, pick a sample number to represent glubbing hours. The value should be an integer value between 0 and 100. Print only the number and not the complete sentence.)NPFX",
};

constexpr std::string_view k_human_style_positive_parts[] = {
    R"NPFX(There's a hobby called glubbing which has clear health benefits. Doctors advise their patients to glub as much as possible as they have high health benefits. More hours of glubbing the better. Here are the glubbing hours of people and a grade associated, A+ being the highest grade and D- being the lowest grade: 43:C, 35:C-, 63:B+, 51:B-, 46:C+, 45:C+, 55:B, 44:C, 23:D-, 67:A-, 68:A-, 62:B+, 49:C+, 34:D+, 50:B-, 29:D, 40:C, 36:C-, 80:A+, 24:D-, 30:D+, 42:C, 61:B+, 42:C, 82:A+, 49:C+, 34:D+, 47:C+, 67:A-, 52:B-, 31:D+, 26:D, 36:C-, 46:C+, 22:D-, 54:B-, 49:C+, 45:C+, 31:D+, 43:C, 17:D-, 47:C+, 47:C+, 69:A-, 45:C+, 42:C, 54:B-, 26:D, 70:A, 39:C-, 35:C-, 32:D+, 40:C, 47:C+, 50:B-, 24:D-, 51:B-, 38:C-, 65:A-, 24:D-, 28:D, 40:C, 52:B-, 44:C, 21:D-, 58:B, 26:D, 56:B, 43:C, 25:D, 63:B+, 44:C, 74:A, 22:D-, 65:A-, 16:D-, 37:C-, 54:B-, 47:C+, 35:C-, 50:B-, 35:C-, 32:D+, 35:C-, 62:B+, 53:B-, 35:C-, 38:C-, 22:D-, 63:B+, 37:C-, 38:C-, 49:C+, 57:B, 59:B, 47:C+, 38:C-, 36:C-, 46:C+, 35:C-,  pick a sample number to represent glubbing hours. The value should be an integer value between 0 and 100. Print only the number and not the complete sentence.)NPFX",
};

constexpr std::string_view k_human_style_negative_parts[] = {
    R"NPFX(Suppose there is a hobby called glubbing, and doctors say, 'although it is safe to glub for a few minutes every week, doctors warn that there are serious health risks associated with glubbing for longer periods of time.' Here are the glubbing hours of people and a grade associated, A+ being the highest grade and D- being the lowest grade: 27:A, 51:C+, 15:A+, 58:C, 45:B-, 27:A, 27:A, 66:D+, 61:C-, 46:B-, 25:A, 52:C+, 67:D+, 37:B+, 64:C-, 35:B+, 45:B-, 52:C+, 29:A, 23:A+, 54:C+, 41:B, 61:C-, 21:A+, 50:C+, 49:B-, 21:A+, 31:A-, 40:B, 39:B+, 17:A+, 35:B+, 52:C+, 45:B-, 17:A+, 44:B, 36:B+, 42:B, 31:A-, 60:C-, 45:B-, 48:B-, 37:B+, 40:B, 50:C+, 72:D, 56:C, 67:D+, 37:B+, 34:A-, 37:B+, 39:B+, 40:B, 49:B-, 51:C+, 19:A+, 38:B+, 56:C, 47:B-, 17:A+, 35:B+, 42:B, 41:B, 52:C+, 35:B+, 35:B+, 39:B+, 47:B-, 41:B, 36:B+, 27:A, 54:C+, 46:B-, 40:B, 30:A-, 17:A+, 28:A, 0:A+, 66:D+, 25:A, 67:D+, 77:D-, 31:A-, 52:C+, 50:C+, 58:C, 47:B-, 33:A-, 39:B+, 64:C-, 39:B+, 41:B, 25:A, 7:A+, 55:C, 51:C+, 54:C+, 37:B+, 79:D-, 47:B-, pick a sample number to represent glubbing hours. The value should be an integer value between 0 and 100. Print only the number and not the complete sentence.)NPFX",
};

} // namespace

const std::vector<Fixture>& all()
{
    static const std::vector<Fixture> table = [] {
        std::vector<Fixture> t;
        t.push_back(make("concepts", Format::jsonl, "Existing-concept corpus: average/ideal/sample prompt phrasings with temperature-zero answers used by the mock", k_concepts_parts));
        t.push_back(make("exemplars", Format::jsonl, "Prototype passages, 8 categories x 6 exemplars", k_exemplars_parts));
        t.push_back(make("symptom-batches", Format::jsonl, "Case-study symptom batches in table order (a duplicated row is kept)", k_symptom_batches_parts));
        t.push_back(make("case-study-results", Format::jsonl, "Reported average/ideal/sample recovery weeks per batch", k_case_study_results_parts));
        t.push_back(make("prototype-ratings", Format::jsonl, "Reported 0-7 ratings per exemplar and composite", k_prototype_ratings_parts));
        t.push_back(make("human-existing", Format::jsonl, "Human average/ideal/sample answers for the existing-concept set", k_human_existing_parts));
        t.push_back(make("llm-existing", Format::jsonl, "LLM average/ideal/sample answers with the printed ideal-side marking", k_llm_existing_parts));
        t.push_back(make("temp-zero", Format::jsonl, "LLM average/ideal/sample answers at temperature zero", k_temp_zero_parts));
        t.push_back(make("novel-summary", Format::jsonl, "Mean average answer and mean sample per modality and valence", k_novel_summary_parts));
        t.push_back(make("model-comparison", Format::jsonl, "Binomial p and ideal-side fraction per model; recovered counts where consistent", k_model_comparison_parts));
        t.push_back(make("prototype-summary", Format::jsonl, "Average/ideal/prototype score per category", k_prototype_summary_parts));
        t.push_back(make("mu-table", Format::jsonl, "Sample means for shifted input ranges", k_mu_table_parts));
        t.push_back(make("sample-prompt-variants", Format::jsonl, "Alternative sample prompts incl. debias prompts, with reported (sample, average) means", k_sample_prompt_variants_parts));
        t.push_back(make("description-variants", Format::jsonl, "Alternative concept descriptions with reported statistics", k_description_variants_parts));
        t.push_back(make("concept-renames", Format::jsonl, "Alternative invented concept names", k_concept_renames_parts));
        t.push_back(make("novel-other-models", Format::jsonl, "Novel-concept results for other models", k_novel_other_models_parts));
        t.push_back(make("appendix-m-positive", Format::text, "Novel-concept prompt, positive valence", k_appendix_m_positive_parts));
        t.push_back(make("appendix-m-negative", Format::text, "Novel-concept prompt, negative valence", k_appendix_m_negative_parts));
        t.push_back(make("appendix-m-neutral", Format::text, "Novel-concept prompt, neutral valence", k_appendix_m_neutral_parts));
        t.push_back(make("human-style-positive", Format::text, "Novel-concept prompt with a health-benefit framing", k_human_style_positive_parts));
        t.push_back(make("human-style-negative", Format::text, "Novel-concept prompt with a health-risk framing", k_human_style_negative_parts));
        return t;
    }();
    return table;
}

} // namespace normprobe::fixtures
