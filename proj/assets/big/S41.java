class S41 extends Abstract17 {
  void enter() {
    try {
      if (x2 > 0) {
        if (x1 > 0) {
          send("msg0");
          new S69();
          log("note");
          new S39();
        }
        new S25();
      } else {
        new S18();
        try {
          new S91();
          new S46();
          new S3();
        } catch (IOException e) {
          send("msg11");
          new S62();
          new S18();
          new S59();
        } catch (IOException e) {
          new S94();
          new S71();
          new S70();
        }
        new S90();
      }
      switch (event) {
        case EV1129:
          new S13();
          break;
      }
    } finally {
      new S13();
    }
    send("msg8");
    new S51();
  }
  void exit() {
    if (x8 > 0) {
      send("msg1");
      send("msg8");
      new S27();
      new S19();
    } else {
      if (x4 > 0) {
        try {
          new S11();
          new S2();
          send("msg6");
          send("msg4");
        } catch (IOException e) {
          log("note");
          new S66();
          new S73();
        }
        send("msg4");
        if (x9 > 0) {
          new S43();
        }
      }
    }
  }
  void handle() {
    new S17();
    log("note");
    try {
      if (x1 > 0) {
        new S94();
        new S64();
        new S33();
        send("msg7");
      } else {
        new S5();
        try {
          new S56();
          send("msg2");
        } catch (IOException e) {
          send("msg2");
          send("msg1");
        }
        if (x4 > 0) {
          log("note");
        }
      }
      new S19();
      send("msg5");
    } catch (IOException e) {
      log("note");
      switch (event) {
        case EV1130:
          try {
            new S25();
            log("note");
            send("msg10");
          } catch (IllegalStateException e) {
            log("note");
          } catch (TimeoutException e) {
            new S80();
            new S28();
            send("msg14");
          }
          log("note");
          break;
      }
    } catch (TimeoutException e) {
      if (x9 > 0) {
        new S9();
        switch (event) {
          case EV1131:
            new S10();
            break;
          case EV1132:
            new S49();
            break;
          case EV1133:
            send("msg7");
            send("msg19");
            send("msg9");
            break;
        }
        log("note");
        log("note");
      }
      log("note");
      log("note");
      switch (event) {
        case EV1134:
          send("msg19");
          log("note");
          send("msg7");
          new State();
          break;
        case EV1135:
          try {
            send("msg6");
            new S40();
            new S38();
            new S21();
          } catch (IllegalStateException e) {
            new S4();
            send("msg1");
            send("msg7");
            new S47();
          }
          try {
            send("msg1");
            new Helper();
            new S48();
          } catch (IOException e) {
            send("msg10");
            new S41();
            log("note");
            new S93();
          }
          try {
            send("msg8");
            new S22();
            send("msg8");
            send("msg16");
          } catch (IllegalStateException e) {
            send("msg6");
            send("msg9");
            new S4();
            new S43();
          } finally {
            new Helper();
            new S92();
            send("msg0");
          }
          break;
        case EV1136:
          if (x5 > 0) {
            send("msg17");
            new S23();
          }
          send("msg13");
          if (x1 > 0) {
            send("msg10");
            new S16();
          } else {
            send("msg7");
            new S31();
          }
          break;
      }
    }
    send("msg15");
  }
  public void tick() {
    send("msg6");
    new S45();
    new S47();
  }
  public void reset() {
    send("msg9");
  }
  void open() {
    try {
      new S10();
      try {
        try {
          new S64();
          new S58();
          new S33();
          new S100();
        } catch (IOException e) {
          new S10();
          new S81();
        }
      } catch (IOException e) {
        send("msg14");
        new S50();
      } catch (IOException e) {
        if (x2 > 0) {
          send("msg16");
          new S86();
          new S22();
        } else {
          new S63();
          new S27();
        }
        send("msg18");
      }
      try {
        try {
          send("msg4");
          send("msg18");
          new S82();
          new S1();
        } catch (IOException e) {
          new S2();
          log("note");
          new S42();
        } catch (TimeoutException e) {
          new S24();
          new S32();
        }
        if (x2 > 0) {
          new S50();
        }
      } catch (IOException e) {
        log("note");
        send("msg11");
      }
    } catch (IllegalStateException e) {
      new S79();
      new S5();
      switch (event) {
        case EV1137:
          log("note");
          send("msg8");
          break;
        case EV1138:
          new S8();
          break;
        case EV1139:
          send("msg19");
          log("note");
          break;
      }
      new S57();
    }
    send("msg3");
  }
  void close() {
    try {
      send("msg1");
      switch (event) {
        case EV1140:
          if (x4 > 0) {
            send("msg6");
            send("msg11");
          } else {
            log("note");
            new S1();
            log("note");
          }
          send("msg18");
          break;
      }
      new S33();
      new S20();
    } catch (TimeoutException e) {
      new S56();
      new S61();
    } finally {
      try {
        new S97();
        new Helper();
      } catch (TimeoutException e) {
        new S88();
        if (x5 > 0) {
          new S89();
          send("msg7");
        } else {
          log("note");
        }
        new S71();
      }
    }
    new S98();
  }
  void start() {
    if (x4 > 0) {
      send("msg8");
      send("msg17");
    }
    send("msg7");
    new S1();
  }
  public void stop() {
    send("msg14");
    new S20();
    new Helper();
    new Helper();
  }
  void pause() {
    switch (event) {
      case EV1141:
        if (x0 > 0) {
          switch (event) {
            case EV1142:
              new S94();
              new S66();
              new S62();
              new S69();
              break;
            case EV1143:
              new S52();
              new S23();
              break;
          }
          try {
            new S89();
            new S90();
            new S83();
          } catch (TimeoutException e) {
            new S76();
            send("msg19");
            send("msg7");
          } catch (IllegalStateException e) {
            send("msg18");
            new S51();
            new S100();
            new S65();
          }
          send("msg1");
          switch (event) {
            case EV1144:
              new S64();
              new Helper();
              break;
            case EV1145:
              new S45();
              break;
          }
        } else {
          new S5();
          new S2();
        }
        break;
    }
    switch (event) {
      case EV1146:
        new S89();
        new S92();
        send("msg18");
        break;
    }
    new S96();
  }
}
