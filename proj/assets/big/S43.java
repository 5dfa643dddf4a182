class S43 extends Abstract20 {
  void enter() {
    send("msg17");
    switch (event) {
      case EV1180:
        if (x3 > 0) {
          new S64();
          send("msg3");
          switch (event) {
            case EV1181:
              send("msg18");
              new S9();
              send("msg9");
              new State();
              break;
          }
        }
        try {
          switch (event) {
            case EV1182:
              log("note");
              new S24();
              new Helper();
              break;
            case EV1183:
              send("msg17");
              new S79();
              break;
          }
          send("msg5");
        } catch (IllegalStateException e) {
          switch (event) {
            case EV1184:
              send("msg1");
              new S47();
              send("msg12");
              new S27();
              break;
            case EV1185:
              send("msg17");
              new S4();
              new S77();
              new S92();
              break;
          }
          send("msg8");
          send("msg13");
        } catch (IllegalStateException e) {
          if (x3 > 0) {
            send("msg15");
            send("msg0");
            log("note");
            send("msg18");
          }
        }
        break;
    }
    log("note");
    new S89();
  }
  public void exit() {
    try {
      send("msg17");
      new Helper();
      switch (event) {
        case EV1186:
          switch (event) {
            case EV1187:
              send("msg19");
              new S94();
              send("msg17");
              log("note");
              break;
          }
          new S87();
          log("note");
          switch (event) {
            case EV1188:
              new S69();
              new Helper();
              break;
            case EV1189:
              new S94();
              send("msg13");
              send("msg12");
              send("msg11");
              break;
            case EV1190:
              new S21();
              new S5();
              break;
          }
          break;
        case EV1191:
          new State();
          new S89();
          break;
        case EV1192:
          switch (event) {
            case EV1193:
              new S87();
              new S51();
              send("msg13");
              break;
            case EV1194:
              new State();
              send("msg9");
              break;
            case EV1195:
              new Helper();
              new S10();
              break;
          }
          send("msg6");
          try {
            send("msg17");
            new State();
          } finally {
            send("msg19");
            send("msg4");
            new State();
            log("note");
          }
          log("note");
          break;
      }
    } finally {
      new Helper();
      new S26();
    }
    if (x6 > 0) {
      try {
        switch (event) {
          case EV1196:
            new S50();
            send("msg16");
            new S11();
            send("msg7");
            break;
        }
        new S14();
      } finally {
        new Helper();
        new S70();
      }
      if (x6 > 0) {
        send("msg12");
        try {
          new S2();
          new S21();
          send("msg14");
          new State();
        } catch (IllegalStateException e) {
          send("msg3");
        } catch (IllegalStateException e) {
          send("msg3");
          new S77();
          new S69();
        }
        new S55();
        new S31();
      } else {
        new S78();
        switch (event) {
          case EV1197:
            new S21();
            new S18();
            log("note");
            break;
          case EV1198:
            send("msg17");
            new S45();
            new Helper();
            break;
          case EV1199:
            send("msg7");
            log("note");
            send("msg17");
            break;
        }
        send("msg4");
      }
    }
    new S55();
    try {
      new S53();
      new S48();
    } catch (IllegalStateException e) {
      new S54();
      send("msg14");
      try {
        switch (event) {
          case EV1200:
            new S94();
            log("note");
            send("msg4");
            new S47();
            break;
        }
        try {
          log("note");
          send("msg14");
          send("msg18");
        } catch (IllegalStateException e) {
          new S78();
          send("msg8");
          new S1();
        }
      } finally {
        send("msg17");
        send("msg0");
        switch (event) {
          case EV1201:
            new S92();
            send("msg9");
            break;
          case EV1202:
            send("msg1");
            new S70();
            send("msg9");
            new S88();
            break;
        }
      }
      send("msg5");
    } catch (IOException e) {
      switch (event) {
        case EV1203:
          send("msg14");
          new S99();
          switch (event) {
            case EV1204:
              new S59();
              break;
            case EV1205:
              new S5();
              break;
            case EV1206:
              send("msg19");
              new S98();
              new S39();
              send("msg12");
              break;
          }
          send("msg15");
          break;
      }
      log("note");
    }
  }
  public void handle() {
    send("msg8");
    if (x5 > 0) {
      switch (event) {
        case EV1207:
          try {
            new S12();
            send("msg2");
            new S89();
          } catch (TimeoutException e) {
            new S40();
            new S25();
          } catch (TimeoutException e) {
            send("msg17");
          }
          break;
        case EV1208:
          switch (event) {
            case EV1209:
              new S61();
              break;
          }
          new S23();
          switch (event) {
            case EV1210:
              new S31();
              send("msg18");
              break;
            case EV1211:
              send("msg8");
              new Helper();
              break;
          }
          break;
      }
      new S91();
    } else {
      new S40();
    }
  }
  public void tick() {
    log("note");
    new S37();
  }
  void reset() {
    switch (event) {
      case EV1212:
        if (x6 > 0) {
          if (x1 > 0) {
            new Helper();
            new S55();
          }
          if (x7 > 0) {
            send("msg18");
          }
        } else {
          new S75();
          switch (event) {
            case EV1213:
              send("msg14");
              new S96();
              send("msg4");
              break;
            case EV1214:
              send("msg11");
              log("note");
              send("msg8");
              new State();
              break;
            case EV1215:
              new S33();
              new S35();
              break;
          }
        }
        new S26();
        break;
      case EV1216:
        switch (event) {
          case EV1217:
            if (x0 > 0) {
              send("msg16");
              send("msg11");
            } else {
              new S41();
              new Helper();
              log("note");
            }
            new S80();
            break;
        }
        break;
      case EV1218:
        send("msg17");
        new S25();
        new S30();
        if (x3 > 0) {
          if (x6 > 0) {
            new S27();
            send("msg1");
          }
          if (x9 > 0) {
            new S20();
            new S57();
            send("msg5");
          }
          switch (event) {
            case EV1219:
              new S26();
              new S9();
              new S72();
              new S7();
              break;
          }
          switch (event) {
            case EV1220:
              send("msg6");
              log("note");
              break;
            case EV1221:
              new S27();
              new Helper();
              new State();
              new S44();
              break;
          }
        } else {
          new S35();
          send("msg5");
          send("msg19");
          try {
            new S60();
            new S54();
          } catch (IOException e) {
            new S61();
            new S53();
          }
        }
        break;
    }
    send("msg15");
    send("msg4");
  }
  public void open() {
    send("msg10");
    if (x2 > 0) {
      new S99();
    }
    new S45();
  }
  void close() {
    switch (event) {
      case EV1222:
        send("msg17");
        break;
    }
    send("msg17");
  }
  public void start() {
    send("msg17");
    log("note");
    log("note");
    if (x4 > 0) {
      log("note");
      try {
        new S86();
        if (x6 > 0) {
          new S61();
          send("msg0");
          new S31();
          new Helper();
        } else {
          new S41();
          send("msg13");
        }
        new S54();
        new S35();
      } catch (TimeoutException e) {
        new S16();
      } finally {
        send("msg10");
        send("msg3");
        send("msg13");
        new S82();
      }
      new S26();
    } else {
      new S65();
      send("msg6");
      new S17();
    }
  }
  void stop() {
    switch (event) {
      case EV1223:
        new S33();
        send("msg1");
        new S62();
        break;
      case EV1224:
        try {
          send("msg2");
          log("note");
          switch (event) {
            case EV1225:
              new S78();
              new S3();
              break;
            case EV1226:
              new S84();
              break;
            case EV1227:
              log("note");
              break;
          }
        } catch (TimeoutException e) {
          new S55();
          new S74();
          send("msg8");
          new S95();
        } catch (TimeoutException e) {
          send("msg4");
        }
        send("msg6");
        break;
      case EV1228:
        send("msg11");
        new S12();
        new S21();
        break;
    }
  }
  public void pause() {
    send("msg19");
  }
}
