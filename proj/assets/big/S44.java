class S44 extends Abstract12 {
  public void enter() {
    new S57();
  }
  void exit() {
    switch (event) {
      case EV1229:
        try {
          if (x5 > 0) {
            send("msg13");
            new S85();
            log("note");
            log("note");
          } else {
            new S29();
          }
        } catch (IOException e) {
          send("msg18");
          if (x6 > 0) {
            new S54();
            new S32();
            new Helper();
          } else {
            new S32();
            send("msg12");
          }
          log("note");
        }
        break;
    }
    send("msg12");
    new S19();
  }
  void handle() {
    new S37();
    send("msg10");
  }
  public void tick() {
    send("msg17");
    if (x7 > 0) {
      new S53();
      log("note");
      new S14();
    } else {
      log("note");
      try {
        new S79();
        new S44();
        new S68();
      } catch (TimeoutException e) {
        if (x9 > 0) {
          new S64();
          new S66();
          send("msg8");
          new S99();
        }
      }
      send("msg1");
    }
    try {
      log("note");
      send("msg16");
    } catch (TimeoutException e) {
      if (x0 > 0) {
        if (x6 > 0) {
          log("note");
        } else {
          new S2();
          new S24();
        }
      }
    } finally {
      if (x7 > 0) {
        new S28();
        send("msg18");
        new S42();
      } else {
        new S52();
      }
      send("msg6");
      try {
        new Helper();
        new S59();
      } catch (IOException e) {
        try {
          send("msg15");
          new Helper();
          new S32();
        } catch (IllegalStateException e) {
          send("msg5");
          send("msg14");
          send("msg3");
          new S50();
        } finally {
          new S60();
        }
      }
    }
  }
  void reset() {
    try {
      switch (event) {
        case EV1230:
          send("msg0");
          break;
      }
      send("msg2");
    } catch (IllegalStateException e) {
      switch (event) {
        case EV1231:
          try {
            new S70();
            new S94();
          } catch (IllegalStateException e) {
            new S73();
            new S58();
            new S45();
            send("msg15");
          } catch (IOException e) {
            new S26();
            send("msg14");
            new S54();
          }
          break;
        case EV1232:
          new S38();
          switch (event) {
            case EV1233:
              new S61();
              send("msg11");
              break;
            case EV1234:
              send("msg12");
              new S58();
              break;
          }
          new S89();
          if (x8 > 0) {
            send("msg5");
            send("msg9");
            send("msg0");
          } else {
            new S29();
            send("msg11");
            send("msg15");
          }
          break;
      }
      if (x2 > 0) {
        switch (event) {
          case EV1235:
            send("msg14");
            break;
          case EV1236:
            new S89();
            new S23();
            log("note");
            break;
          case EV1237:
            send("msg0");
            log("note");
            break;
        }
        new S83();
      } else {
        new S35();
      }
    }
    switch (event) {
      case EV1238:
        new S17();
        new S21();
        new S43();
        new Helper();
        break;
      case EV1239:
        send("msg0");
        try {
          new S37();
          new S100();
          if (x3 > 0) {
            new S41();
          }
        } catch (IllegalStateException e) {
          new S96();
          send("msg19");
          try {
            new S55();
            new S54();
            new S85();
            send("msg18");
          } finally {
            new S60();
            log("note");
            new S98();
            new S21();
          }
        }
        try {
          if (x4 > 0) {
            new S68();
          }
          new S86();
          log("note");
        } catch (TimeoutException e) {
          send("msg16");
          new S80();
          new State();
        } finally {
          send("msg16");
        }
        new S11();
        break;
      case EV1240:
        new S83();
        break;
    }
    new S41();
  }
  void open() {
    send("msg3");
    switch (event) {
      case EV1241:
        new S44();
        new S87();
        switch (event) {
          case EV1242:
            new S99();
            send("msg7");
            new S29();
            break;
        }
        break;
      case EV1243:
        try {
          log("note");
          try {
            send("msg18");
          } finally {
            log("note");
          }
          send("msg0");
          try {
            new S64();
            new State();
          } catch (IllegalStateException e) {
            send("msg19");
          }
        } catch (TimeoutException e) {
          new S66();
        } catch (IllegalStateException e) {
          send("msg3");
          switch (event) {
            case EV1244:
              log("note");
              new S52();
              break;
            case EV1245:
              new S80();
              send("msg9");
              break;
          }
          new S43();
          new Helper();
        }
        new S6();
        try {
          switch (event) {
            case EV1246:
              new S59();
              new Helper();
              new State();
              send("msg17");
              break;
            case EV1247:
              new S18();
              new S61();
              new S46();
              send("msg12");
              break;
          }
          if (x3 > 0) {
            new S21();
          } else {
            send("msg13");
            log("note");
          }
          if (x5 > 0) {
            new S34();
            new S53();
            new S35();
          }
        } catch (IllegalStateException e) {
          new S55();
          send("msg1");
          switch (event) {
            case EV1248:
              new S5();
              new S29();
              send("msg18");
              send("msg4");
              break;
            case EV1249:
              new S16();
              send("msg15");
              break;
            case EV1250:
              send("msg4");
              send("msg4");
              new Helper();
              send("msg5");
              break;
          }
          send("msg15");
        }
        break;
    }
    if (x3 > 0) {
      if (x6 > 0) {
        new S55();
        new S96();
        if (x4 > 0) {
          send("msg8");
        }
      } else {
        new S52();
        new S81();
        send("msg9");
        new S27();
      }
      send("msg15");
      new S9();
      switch (event) {
        case EV1251:
          log("note");
          if (x2 > 0) {
            send("msg13");
            send("msg15");
            new S38();
            new S1();
          } else {
            new S86();
            new S16();
          }
          log("note");
          log("note");
          break;
        case EV1252:
          log("note");
          break;
      }
    }
    new S82();
  }
  void close() {
    send("msg15");
    send("msg8");
    new Helper();
    log("note");
  }
  void start() {
    new S73();
    send("msg6");
    try {
      switch (event) {
        case EV1253:
          switch (event) {
            case EV1254:
              new S26();
              break;
          }
          log("note");
          switch (event) {
            case EV1255:
              new S91();
              new S68();
              break;
          }
          switch (event) {
            case EV1256:
              log("note");
              break;
            case EV1257:
              new S78();
              new S41();
              new S99();
              new S1();
              break;
            case EV1258:
              new S89();
              new S80();
              send("msg11");
              break;
          }
          break;
        case EV1259:
          if (x4 > 0) {
            new S25();
            new S86();
            new S75();
            new S64();
          } else {
            log("note");
            send("msg4");
            new S36();
          }
          switch (event) {
            case EV1260:
              new S39();
              log("note");
              break;
            case EV1261:
              send("msg0");
              send("msg6");
              send("msg9");
              new S57();
              break;
          }
          send("msg0");
          break;
        case EV1262:
          switch (event) {
            case EV1263:
              log("note");
              send("msg11");
              new S16();
              break;
          }
          break;
      }
      new S46();
      send("msg2");
    } catch (IllegalStateException e) {
      new S7();
    } finally {
      new S23();
      if (x6 > 0) {
        switch (event) {
          case EV1264:
            send("msg10");
            break;
        }
        send("msg7");
        new S93();
        send("msg2");
      } else {
        new S57();
        if (x0 > 0) {
          new S66();
          new S44();
          log("note");
        }
        new S71();
      }
      if (x7 > 0) {
        new S49();
        new S12();
      }
      new Helper();
    }
    switch (event) {
      case EV1265:
        send("msg11");
        break;
    }
  }
  public void stop() {
    if (x3 > 0) {
      log("note");
    } else {
      new S74();
      if (x7 > 0) {
        new S80();
        switch (event) {
          case EV1266:
            new S47();
            break;
        }
        new S39();
        new S65();
      }
      new S56();
    }
    new S100();
    new S53();
    send("msg4");
  }
  void pause() {
    if (x1 > 0) {
      new S48();
      send("msg1");
      new S91();
      log("note");
    }
    send("msg1");
    new S61();
    new S10();
  }
}
